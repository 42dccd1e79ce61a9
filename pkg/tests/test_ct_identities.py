"""Constant-term and Jackson-sum series identities (truncated, exact)."""

from fractions import Fraction

import pytest

from daha import ct_identities as ct

ORDER = 6


@pytest.mark.parametrize(
    "verifier",
    [
        ct.verify_ct_conjecture,
        ct.verify_ct_recursion,
        ct.verify_gauss_ct,
        ct.verify_jackson_identity,
    ],
)
def test_series_identities_pass(verifier):
    rep = verifier(ORDER)
    assert rep.passed, rep.to_json()


def test_jackson_with_free_t():
    rep = ct.verify_jackson_t_q(4)
    assert rep.passed


def test_shift_recursion():
    rep = ct.verify_shift_recursion(ORDER)
    assert rep.passed


@pytest.mark.parametrize("n,m", [(0, 0), (1, 1), (1, -1)])
def test_master_nonsymmetric(n, m):
    rep = ct.verify_master_nonsymmetric(n, m, 5)
    assert rep.passed, rep.to_json()


def test_master_symmetric():
    rep = ct.verify_symmetric_master(1, 1, 5)
    assert rep.passed


def test_reports_are_deterministic():
    a = ct.verify_ct_conjecture(4).to_json()
    b = ct.verify_ct_conjecture(4).to_json()
    assert a == b
    assert a["lhs_digest"] == a["rhs_digest"]


def test_report_surfaces_discrepancies():
    """A mismatched pair of series must fail with a located first term."""
    lhs = ct.mu_series(4)
    rhs = ct.mu_series(4, shift=1)
    rep = ct._report("synthetic", 4, lhs, rhs)
    assert not rep.passed
    assert rep.first_discrepancy is not None


def test_theta_pair_weights_each_layer():
    from daha.coeffs import TwoParamField
    from daha.laurent import LaurentPoly

    fld = TwoParamField(4)
    f = LaurentPoly.x_pow(fld, 2) + LaurentPoly.x_pow(fld, -2)
    s = ct.laurent_to_series(f, Fraction(4))
    tp = ct.theta_pair(s)
    # both layers pick up the same Gaussian weight q^(j^2/4) = q
    assert tp.terms == {(Fraction(1), Fraction(0), 0): Fraction(2)}


def test_truncation_respects_order():
    s4 = ct.mu_series(4)
    s6 = ct.mu_series(6)
    for key, val in s4.terms.items():
        assert s6.terms.get(key) == val
