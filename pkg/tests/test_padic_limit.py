"""Leading-coefficient limits at q -> infinity and the degenerate pairings."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from daha import padic_limit as pl
from daha.macdonald import e_poly

HALF = Fraction(1, 2)


@pytest.fixture(scope="module")
def fld():
    return pl.generic_field()


def test_limit_of_rational_anchor(fld):
    # q/(1-q) -> -1
    q = fld.q()
    lv = pl.q_limit(fld, q / (fld.one - q))
    assert lv.finite and lv.value == -fld.one


def test_limit_scales(fld):
    t = fld.t()
    q = fld.q()
    assert pl.q_limit(fld, fld.one / q).kind == "zero"
    assert pl.q_limit(fld, q).kind == "divergent"
    lv = pl.q_limit(fld, (q * t + 1) / (q - t))
    assert lv.finite and lv.value == t


def test_limit_unwrap_raises_on_divergence(fld):
    lv = pl.q_limit(fld, fld.q())
    with pytest.raises(pl.DivergentCoefficient):
        lv.unwrap("test value")


def test_t_flip_is_an_involution(fld):
    f = (fld.t_half() + fld.q()) / (fld.one - fld.t())
    g = pl.t_flip(fld, f)
    assert pl.t_flip(fld, g) == f
    assert g == (fld.monomial(0, -HALF) + fld.q()) / (fld.one - fld.monomial(0, -1))


def test_spherical_limit_matches_closed_form(fld):
    for m in range(0, 5):
        assert pl.spherical_limit(fld, m) == pl.phi_closed_form(fld, m)


def test_matsumoto_recursion():
    rep = pl.verify_matsumoto_recursion(4)
    assert rep.passed, rep.failures


def test_eigenfunction_coefficient_limits(fld):
    # every coefficient of eps_m has a finite limit; the example 2_# weight
    # limit of mu1 is t
    f = e_poly(fld, 2)
    for c in f.poly.coeffs.values():
        pl.q_limit(fld, c)


def test_pairing_limits():
    rep = pl.limit_pairings(4)
    assert rep.passed, rep.failures


def test_gaussian_divergence():
    assert pl.gaussian_diverges(3)


def test_random_pair_properties():
    assert pl.random_limit_pairs(count=60, seed=7) == 60


@settings(max_examples=25, deadline=None)
@given(
    st.integers(-3, 3),
    st.integers(-2, 2),
    st.integers(-3, 3),
    st.integers(-2, 2),
)
def test_limit_is_multiplicative(aq, at, bq, bt):
    fld = pl.generic_field()
    f = fld.monomial(aq, Fraction(at, 2)) + 1
    g = fld.monomial(bq, Fraction(bt, 2)) + 1
    lf = pl.q_limit(fld, f)
    lg = pl.q_limit(fld, g)
    lfg = pl.q_limit(fld, f * g)
    if lf.finite and lg.finite:
        assert lfg.finite and lfg.value == lf.value * lg.value
    elif "zero" in (lf.kind, lg.kind) and "divergent" not in (lf.kind, lg.kind):
        assert lfg.kind == "zero"
