"""Laurent polynomial layer over the generic coefficient field."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from daha.laurent import LaurentPoly

HALF = Fraction(1, 2)

coeff_ints = st.integers(min_value=-6, max_value=6)


def polys(fld):
    def build(terms):
        p = LaurentPoly(fld)
        for n, c in terms:
            if c:
                p = p + LaurentPoly.x_pow(fld, n, fld.from_int(c))
        return p

    return st.lists(
        st.tuples(st.integers(-4, 4), coeff_ints), min_size=0, max_size=4
    ).map(build)


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_ring_axioms(fld4, data):
    f = data.draw(polys(fld4))
    g = data.draw(polys(fld4))
    h = data.draw(polys(fld4))
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) * h == f * h + g * h
    assert f + LaurentPoly.zero(fld4) == f
    assert f * LaurentPoly.one(fld4) == f


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_invert_x_is_a_ring_involution(fld4, data):
    f = data.draw(polys(fld4))
    g = data.draw(polys(fld4))
    assert f.invert_x().invert_x() == f
    assert (f * g).invert_x() == f.invert_x() * g.invert_x()


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_bar_is_multiplicative(fld4, data):
    f = data.draw(polys(fld4))
    g = data.draw(polys(fld4))
    assert (f * g).bar() == f.bar() * g.bar()
    assert f.bar().bar() == f


@settings(max_examples=20, deadline=None)
@given(st.data())
def test_evaluation_is_a_homomorphism(fld4, data):
    f = data.draw(polys(fld4))
    g = data.draw(polys(fld4))
    point = fld4.monomial(HALF, -HALF)
    assert (f * g).evaluate(point) == f.evaluate(point) * g.evaluate(point)
    assert (f + g).evaluate(point) == f.evaluate(point) + g.evaluate(point)


def test_shift_and_scale_x(fld4):
    f = LaurentPoly.x_pow(fld4, 2) + LaurentPoly.x_pow(fld4, -1)
    assert f.shift(3) == LaurentPoly.x_pow(fld4, 5) + LaurentPoly.x_pow(fld4, 2)
    q = fld4.q()
    g = f.scale_x(q)
    assert g.coeff(2) == q * q
    assert g.coeff(-1) == fld4.one / q


def test_symmetric_detection(fld4):
    f = LaurentPoly.x_pow(fld4, 3) + LaurentPoly.x_pow(fld4, -3)
    assert f.is_symmetric()
    assert not (f + LaurentPoly.x_pow(fld4, 1)).is_symmetric()


def test_constant_term_and_support(fld4):
    f = LaurentPoly.x_pow(fld4, 0, fld4.from_int(7)) + LaurentPoly.x_pow(fld4, 5)
    assert f.constant_term() == fld4.from_int(7)
    assert f.min_exp() == 0 and f.max_exp() == 5


def test_div_exact(fld4):
    f = LaurentPoly.x_pow(fld4, 1) + LaurentPoly.one(fld4)
    g = LaurentPoly.x_pow(fld4, 2, fld4.from_int(3))
    assert (f * g).div_exact(g) == f
