"""Rational degeneration: Dunkl operator, sl2 structure, truncated Hankel."""

from fractions import Fraction

import pytest

from daha import rational_daha as rd
from daha.rational_daha import DunklModel, XPoly


def test_dunkl_low_degree_anchors():
    model = DunklModel()
    k = model.k
    one = model.mono(0)
    assert model.dunkl(one).is_zero()
    assert model.dunkl(model.mono(1)) == one.scaled(model.scalar(1) + k * 2)
    assert model.dunkl(model.mono(2)) == model.mono(1, 2)
    assert model.dunkl(model.mono(3)) == model.mono(2, 3) + model.mono(2).scaled(
        k * 2
    )


def test_dunkl_numeric_k():
    p = rd.dunkl({1: 1}, k=Fraction(1, 3))
    assert p == XPoly({0: Fraction(5, 3)})


def test_dunkl_module_function_accepts_xpoly():
    model = DunklModel(k=2)
    p = model.mono(4)
    assert rd.dunkl(p, k=2) == model.dunkl(p)


@pytest.mark.parametrize("W", [3, 5, 7])
def test_hpp_relations(W):
    rep = rd.check_hpp_relations(W)
    assert rep.passed, rep.failures


def test_casimir_scalars():
    """c acts by (k+1/2)(k-3/2) on evens and (k+3/2)(k-1/2) on odds."""
    model = DunklModel()
    k = model.k
    half = model.scalar(Fraction(1, 2))
    even = (k + half) * (k - model.scalar(Fraction(3, 2)))
    odd = (k + model.scalar(Fraction(3, 2))) * (k - half)
    for j in range(6):
        p = model.mono(j)
        want = even if j % 2 == 0 else odd
        assert model.casimir(p) == p.scaled(want)


def test_truncated_hankel_closed_forms_n2():
    n = 2
    model = rd.quotient_model(n)
    half = Fraction(1, 2)
    assert rd.truncated_hankel(n, model.mono(0)) == model.mono(4, half)
    assert rd.truncated_hankel(n, model.mono(4)) == model.mono(0, 2)


def test_truncated_hankel_degree_guard():
    with pytest.raises(rd.DegreeOutOfRange):
        rd.truncated_hankel(2, XPoly({5: Fraction(1)}))


def test_truncated_hankel_inversion():
    """F_- F_+ = (-1)^n id on the monomial basis."""
    for n in (1, 2, 3):
        model = rd.quotient_model(n)
        sgn = Fraction((-1) ** n)
        for j in range(2 * n + 1):
            p = model.mono(j)
            q = rd.truncated_hankel(n, rd.truncated_hankel(n, p, 1), -1)
            assert q == p.scaled(model.scalar(sgn))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_truncated_plancherel(n):
    rep = rd.verify_truncated_plancherel(n)
    assert rep.passed, rep.failures


def test_residue_pairing_symmetry():
    n = 2
    model = rd.quotient_model(n)
    f = model.mono(1) + model.mono(3, 2)
    g = model.mono(1, 5) + model.mono(2)
    assert rd.residue_pairing(n, f, g) == rd.residue_pairing(n, g, f)


def test_master_series_small():
    rep = rd.verify_master_series(3, 6)
    assert rep.passed, rep.failures


def test_psi_structure():
    rep = rd.verify_psi_structure(5)
    assert rep.passed, rep.failures


def test_classification_small():
    rep = rd.verify_hpp_classification(3)
    assert rep.passed, rep.failures


def test_hankel_conjugation():
    rep = rd.hankel_conjugation_check(5)
    assert rep.passed, rep.failures


def test_report_json_shape():
    rep = rd.check_hpp_relations(3)
    data = rep.to_json()
    assert data["name"] == "hpp_relations"
    assert data["verdict"] == "pass"
    assert isinstance(data["checks"], dict)
