"""Eigenpolynomial chain: explicit low-degree tables, eigenvalue
property, duality, contiguity, evaluation and norm formulas."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from daha import daha_ops, macdonald
from daha.laurent import LaurentPoly

HALF = Fraction(1, 2)

indices = st.integers(min_value=-4, max_value=4)


def test_explicit_low_degree(fld4):
    q, t, one = fld4.q(), fld4.t(), fld4.one
    c = (one - t) / (one - q * t)

    e1 = macdonald.e_poly(fld4, 1).poly
    assert e1 == LaurentPoly.x_pow(fld4, 1)

    em1 = macdonald.e_poly(fld4, -1).poly
    assert em1 == LaurentPoly.x_pow(fld4, -1) + LaurentPoly.x_pow(fld4, 1, c)

    e2 = macdonald.e_poly(fld4, 2).poly
    assert e2 == LaurentPoly.x_pow(fld4, 2) + LaurentPoly.x_pow(fld4, 0, q * c)


def test_explicit_symmetric(fld4):
    q, t, one = fld4.q(), fld4.t(), fld4.one
    p1 = macdonald.rogers_poly(fld4, 1)
    assert p1 == LaurentPoly.x_pow(fld4, 1) + LaurentPoly.x_pow(fld4, -1)

    p2 = macdonald.rogers_poly(fld4, 2)
    cc = (one - t) * (one + q) / (one - q * t)
    want = (
        LaurentPoly.x_pow(fld4, 2)
        + LaurentPoly.x_pow(fld4, -2)
        + LaurentPoly.x_pow(fld4, 0, cc)
    )
    assert p2 == want


@settings(max_examples=20, deadline=None)
@given(indices)
def test_eigenvalue_property(fld4, m):
    rec = macdonald.e_poly(fld4, m)
    assert daha_ops.op_Y(rec.poly) == rec.poly.scale(rec.eigenvalue)


@settings(max_examples=20, deadline=None)
@given(indices, indices)
def test_duality(fld16, m, n):
    lhs = macdonald.eval_at_sharp(macdonald.eps_poly(fld16, m), n)
    rhs = macdonald.eval_at_sharp(macdonald.eps_poly(fld16, n), m)
    assert lhs == rhs


@pytest.mark.parametrize("direction", ["X", "X_inv"])
@pytest.mark.parametrize("m", range(-3, 4))
def test_contiguity(fld4, direction, m):
    mult = LaurentPoly.x_pow(fld4, 1 if direction == "X" else -1)
    combo = LaurentPoly.zero(fld4)
    for idx, c in macdonald.pieri(fld4, m, direction):
        combo = combo + macdonald.eps_poly(fld4, idx).scale(c)
    assert mult * macdonald.eps_poly(fld4, m) == combo


@pytest.mark.parametrize("m", range(-4, 5))
def test_evaluation_formula(fld4, m):
    rec = macdonald.e_poly(fld4, m)
    assert rec.evaluation == macdonald.evaluation_formula(fld4, m)


@pytest.mark.parametrize("m", range(-3, 4))
def test_norm_formulas(fld4, m):
    eps = macdonald.eps_poly(fld4, m)
    assert macdonald.pairing_mu0(eps, eps) == macdonald.norm_formula(fld4, m, "eps")
    e = macdonald.e_poly(fld4, m).poly
    assert macdonald.pairing_mu0(e, e) == macdonald.norm_formula(fld4, m, "e")


@settings(max_examples=15, deadline=None)
@given(indices, indices)
def test_pairing_orthogonality(fld4, m, n):
    if m == n:
        return
    em = macdonald.e_poly(fld4, m).poly
    en = macdonald.e_poly(fld4, n).poly
    assert fld4.is_zero(macdonald.pairing_mu0(em, en))


def test_rogers_are_symmetric_eigenfunctions(fld4):
    for n in range(0, 4):
        p = macdonald.rogers_poly(fld4, n)
        assert p.is_symmetric()
        img = macdonald.op_L(p)
        if n == 0:
            assert img == p.scale(fld4.t_half() + fld4.monomial(0, -HALF))
            continue
        # eigenvalue t^(1/2) q^(n/2) + t^(-1/2) q^(-n/2)
        ev = fld4.monomial(Fraction(n, 2), HALF) + fld4.monomial(
            Fraction(-n, 2), -HALF
        )
        assert img == p.scale(ev)


def test_mu0_constant_term_is_one(fld4):
    assert macdonald.mu0_coeff(fld4, 0) == fld4.one


def test_eps_normalization(fld4):
    base = fld4.monomial(0, -HALF)
    for m in range(-3, 4):
        assert macdonald.eps_poly(fld4, m).evaluate(base) == fld4.one


def test_creation_chain_matches_closed_form(fld4):
    """Dual route: intertwiner chain vs the recursive expansion."""
    f = LaurentPoly.one(fld4)
    f = daha_ops.intertwiner_A(0, f)
    lead = f.coeff(1)
    assert f.scale(fld4.one / lead) == macdonald.e_poly(fld4, 1).poly
