"""Coefficient domains: generic two-parameter field, cyclotomic fields,
and the folded root-of-unity variants."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from daha.coeffs import (
    CycloField,
    OneParamField,
    RootOfUnityBField,
    SpecializedCycloField,
    TwoParamField,
)

HALF = Fraction(1, 2)

qexps = st.integers(min_value=-8, max_value=8).map(lambda n: Fraction(n, 4))
texps = st.integers(min_value=-4, max_value=4).map(lambda n: Fraction(n, 2))
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def elements(fld):
    """Random field elements built from a handful of monomials."""

    def build(terms):
        acc = fld.zero
        for qe, te, c in terms:
            acc = acc + fld.monomial(qe, te, c)
        return acc

    return st.lists(st.tuples(qexps, texps, coeffs), min_size=1, max_size=2).map(build)


class TestTwoParamField:
    def test_monomial_product(self, fld4):
        a = fld4.monomial(Fraction(3, 4), HALF)
        b = fld4.monomial(Fraction(1, 4), -HALF, Fraction(2))
        assert a * b == fld4.monomial(1, 0, 2)

    def test_q_t_accessors(self, fld4):
        assert fld4.q() == fld4.monomial(1)
        assert fld4.t() == fld4.t_half() * fld4.t_half()
        assert fld4.q_half() ** 2 == fld4.q()

    def test_from_fraction_roundtrip(self, fld4):
        x = fld4.from_fraction(Fraction(-7, 3))
        assert x + fld4.from_fraction(Fraction(7, 3)) == fld4.zero

    @settings(max_examples=15, deadline=None)
    @given(st.data())
    def test_bar_is_a_ring_involution(self, fld4, data):
        f = data.draw(elements(fld4))
        g = data.draw(elements(fld4))
        assert fld4.bar(fld4.bar(f)) == f
        assert fld4.bar(f * g) == fld4.bar(f) * fld4.bar(g)
        assert fld4.bar(f + g) == fld4.bar(f) + fld4.bar(g)

    def test_bar_inverts_parameters(self, fld4):
        f = fld4.monomial(Fraction(5, 4), Fraction(3, 2))
        assert fld4.bar(f) == fld4.monomial(Fraction(-5, 4), Fraction(-3, 2))

    def test_specialize_b(self, fld4):
        f = fld4.t() + fld4.q()
        val = fld4.specialize_b(f, Fraction(1))
        assert val == fld4.one + fld4.q()

    def test_terms_roundtrip(self, fld4):
        f = fld4.monomial(HALF, 1, Fraction(3)) - fld4.monomial(0, 0, Fraction(1, 2))
        num = fld4.zero
        for qe, te, c in fld4.terms_qt(f.numer):
            num = num + fld4.monomial(qe, te, c)
        den = fld4.zero
        for qe, te, c in fld4.terms_qt(f.denom):
            den = den + fld4.monomial(qe, te, c)
        assert num / den == f

    @settings(max_examples=10, deadline=None)
    @given(st.data())
    def test_division_inverts_multiplication(self, fld4, data):
        f = data.draw(elements(fld4))
        g = data.draw(elements(fld4))
        if fld4.is_zero(g):
            return
        assert (f * g) / g == f


class TestOneParamField:
    def test_t_half_pins_the_exponent(self):
        fld = OneParamField(4, -2)
        # t^(1/2) = q^(-1/2) in this specialization
        assert fld.t_half() == fld.monomial(Fraction(-1, 2))

    def test_unit_variant_squares_to_minus_one(self):
        fld = OneParamField(4, -1, unit_is_i=True)
        i = fld.t_half() / fld.monomial(Fraction(-1, 4))
        assert i * i == -fld.one

    def test_bar_of_zero(self):
        fld = OneParamField(16, -8)
        assert fld.bar(fld.zero) == fld.zero


class TestCycloField:
    def test_zeta_order(self):
        fld = CycloField(12)
        z = fld.zeta(1)
        acc = fld.one
        for _ in range(12):
            acc = acc * z
        assert acc == fld.one

    def test_vanishing_sum(self):
        fld = CycloField(5)
        total = fld.zero
        for j in range(5):
            total = total + fld.zeta(j)
        assert total == fld.zero

    def test_bar_is_complex_conjugation(self):
        fld = CycloField(8)
        z = fld.zeta(3)
        assert fld.bar(z) == fld.zeta(5)
        assert fld.bar(fld.bar(z)) == z

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 11), st.integers(0, 11), coeffs, coeffs)
    def test_arithmetic_matches_exponents(self, e1, e2, c1, c2):
        fld = CycloField(12)
        lhs = (fld.zeta(e1) * c1) * (fld.zeta(e2) * c2)
        rhs = fld.zeta((e1 + e2) % 12) * (c1 * c2)
        assert lhs == rhs


class TestSpecializedCycloField:
    def test_fold_is_consistent(self):
        fld = SpecializedCycloField(3, Fraction(1))
        # q^3 = 1 under the folding
        assert fld.monomial(Fraction(3)) == fld.one
        # t = q^k with k = 1
        assert fld.t() == fld.monomial(Fraction(1))

    def test_half_integral_k(self):
        fld = SpecializedCycloField(2, HALF)
        assert fld.t_half() * fld.t_half() == fld.monomial(0, 1)

    def test_non_lattice_exponent_rejected(self):
        fld = SpecializedCycloField(3, Fraction(1))
        with pytest.raises(ValueError):
            fld.monomial(Fraction(1, 7))


class TestRootOfUnityBField:
    def test_q_has_order_dividing_level(self):
        fld = RootOfUnityBField(4)
        acc = fld.one
        for _ in range(4):
            acc = acc * fld.q()
        assert acc == fld.one

    def test_generic_b_is_free(self):
        fld = RootOfUnityBField(3)
        assert fld.t_half() != fld.one
        assert fld.t_half() * fld.monomial(0, -HALF) == fld.one
