"""Cyclotomic Gaussian sums, truncation identities, reciprocity."""

import math

import pytest

from daha import gauss_sums as gs
from daha.coeffs import CycloField


@pytest.mark.parametrize("N", range(1, 9))
def test_tau_norm(N):
    tau = gs.gauss_tau(N)
    fld = CycloField(tau.L)
    assert tau * fld.bar(tau) == fld.from_int(2 * N)


@pytest.mark.parametrize("N", range(1, 9))
def test_tau_square(N):
    tau = gs.gauss_tau(N)
    fld = CycloField(tau.L)
    # 2iN with i the standard quarter root at this level
    i_unit = fld.zeta(tau.L // 4)
    assert tau * tau == i_unit * (2 * N)


@pytest.mark.parametrize("N,k", [(2, 1), (3, 1), (4, 1), (4, 2), (5, 2), (6, 3)])
def test_jackson_truncation(N, k):
    rep = gs.verify_f33(N, k)
    assert rep.passed, rep.to_json()


def test_truncation_galois_twist():
    """The identity is Galois-stable: any coprime unit works."""
    for unit in (1, 5, 7, 11):
        if math.gcd(unit, 12) == 1:
            assert gs.verify_f33(3, 1, unit=unit).passed


@pytest.mark.parametrize("N", [2, 4, 6, 8, 10])
def test_alternating_square_sums(N):
    assert gs.verify_f34_f35(N).passed


def test_even_level_rejected():
    with pytest.raises(gs.OddN):
        gs.verify_f34_f35(5)


def test_bad_truncation_range_rejected():
    with pytest.raises(gs.BadRange):
        gs.verify_f33(4, 3)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_legendre_bracket_matches_euler(p):
    for m in range(1, 2 * p, 2):
        if math.gcd(m, p) != 1:
            continue
        val = gs.legendre_bracket(m, p)
        expect = gs.legendre_symbol_euler(m, p)
        assert all(c == 0 for c in val.coords[1:])
        assert val.coords[0] == expect


def test_legendre_prime_power():
    for m in (5, 7, 11):
        val = gs.legendre_bracket(m, 27)
        assert val.coords[0] == gs.legendre_symbol_euler(m, 3, 3)


def test_legendre_input_validation():
    with pytest.raises(gs.EvenM):
        gs.legendre_bracket(4, 5)
    with pytest.raises(gs.NotCoprime):
        gs.legendre_bracket(3, 9)
    with pytest.raises(gs.BadRange):
        gs.legendre_bracket(-3, 5)


@pytest.mark.parametrize("m,n", [(1, 3), (1, 5), (3, 5), (5, 7), (3, 8)])
def test_quadratic_sum_closed_form(m, n):
    if math.gcd(m, n) != 1 or m % 2 == 0:
        return
    assert gs.verify_G_formula(m, n).passed


def test_lift_level_is_an_embedding():
    fld = CycloField(4)
    x = fld.zeta(1) + fld.from_int(2)
    y = gs.lift_level(x, 12)
    z = gs.lift_level(x, 12)
    assert y == z
    fld12 = CycloField(12)
    assert y * y == gs.lift_level(x * x, 12)
    assert fld12.bar(y) == gs.lift_level(fld.bar(x), 12)
