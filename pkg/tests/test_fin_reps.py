"""Finite-dimensional modules: builders, spectra, Fourier, Verlinde."""

from fractions import Fraction

import pytest

from daha import fin_reps as fr

HALF = Fraction(1, 2)


@pytest.fixture(scope="module")
def v3():
    return fr.build_v2np1(1)


@pytest.fixture(scope="module")
def perf41():
    return fr.build_perfect(4, 1)


def test_v2np1_shape(v3):
    assert v3.dim == 3
    assert v3.notes["k"] == Fraction(-3, 2)
    assert [lab.m for lab in v3.labels] == [1, 2, 3]


def test_v2np1_relations_and_spectrum(v3):
    assert fr.check_module_relations(v3).passed
    rep = fr.spectrum_report(v3)
    assert rep.passed, rep.failures
    assert fr.orbit_irreducible(v3)


def test_v2np1_discretization_intertwines(v3):
    for name, ok in v3.notes["discretization"]:
        assert ok, name


def test_v2np1_twisted_branch():
    mod = fr.build_v2np1(1, sign=-1)
    assert mod.dim == 3
    assert fr.check_module_relations(mod).passed
    assert fr.spectrum_report(mod).passed


def test_additional_module():
    mod = fr.build_additional(2)
    assert mod.dim == 4
    assert fr.check_module_relations(mod).passed
    assert fr.spectrum_report(mod).passed
    for _, ok in mod.notes["twist_conjugators"]["checks"]:
        assert ok


def test_root_of_unity_even():
    mod = fr.build_root_of_unity(3)
    assert mod.dim == 6
    assert fr.check_module_relations(mod).passed
    cands = fr.root_spectrum_candidates(mod)
    rep = fr.spectrum_report(mod, candidates=cands)
    assert rep.passed, rep.failures


def test_root_of_unity_big_quotient():
    mod = fr.build_root_of_unity(2, C=1)
    assert mod.dim == 8
    assert fr.check_module_relations(mod).passed
    assert mod.notes["X^2N + X^-2N central"]
    assert mod.notes["x_semisimple"]


def test_root_of_unity_rejects_c2():
    with pytest.raises(fr.ReducibleRequest):
        fr.build_root_of_unity(3, C=2)


def test_perfect_shape(perf41):
    assert perf41.dim == 4
    assert perf41.notes["case"] == "a"
    assert [lab.m for lab in perf41.labels] == [-1, 0, 1, 2]


def test_perfect_relations(perf41):
    assert fr.check_module_relations(perf41).passed
    assert fr.spectrum_report(perf41).passed
    assert fr.orbit_irreducible(perf41)


def test_perfect_half_integral_case():
    mod = fr.build_perfect(4, Fraction(-3, 2))
    assert mod.dim == 3
    assert mod.notes["case"] == "b"
    assert fr.check_module_relations(mod).passed


def test_perfect_rejects_off_list():
    with pytest.raises(fr.BadParameters):
        fr.build_perfect(4, 2)
    with pytest.raises(fr.BadParameters):
        fr.build_perfect(4, Fraction(1, 3))


def test_fourier(perf41):
    rep = fr.verify_fourier(perf41)
    assert rep.passed, rep.failures


def test_fourier_v2np1(v3):
    rep = fr.verify_fourier(v3)
    assert rep.passed, rep.failures


def test_duality(perf41, v3):
    assert fr.verify_duality(perf41).passed
    assert fr.verify_duality(v3).passed


def test_plancherel(perf41, v3):
    for mod in (perf41, v3):
        rep = fr.verify_plancherel(mod)
        assert rep.verdict == "pass", rep.first_discrepancy


def test_truncated_master(perf41):
    for l in (-1, 0, 1, 2):
        for m in (-1, 0, 1, 2):
            rep = fr.verify_truncated_master(perf41, l, m)
            assert rep.verdict == "pass", rep.first_discrepancy


def test_gaussian_sum_integer_k(perf41):
    rep = fr.gaussian_sum_report(perf41)
    assert rep.verdict == "pass"


def test_gaussian_sum_negative_half_k():
    mod = fr.build_perfect(4, Fraction(-3, 2))
    rep = fr.gaussian_sum_report(mod)
    assert rep.verdict == "pass"


def test_gaussian_sum_positive_half_k_diverges_from_series_constant():
    """The infinite-sum constant is not the finite grid value; the report
    says so instead of papering over it."""
    mod = fr.build_perfect(4, HALF)
    rep = fr.gaussian_sum_report(mod)
    assert rep.verdict == "fail"
    assert rep.first_discrepancy is not None


def test_fusion_rule_anchors():
    assert fr.fusion_rule(2, 1, 1) == (0, 2)
    assert fr.fusion_rule(3, 1, 2) == (1, 3)
    assert fr.fusion_rule(3, 3, 3) == (0,)
    with pytest.raises(fr.BadParameters):
        fr.fusion_rule(2, 3, 0)


@pytest.mark.parametrize("N", [3, 4])
def test_verlinde_matches_fusion(N):
    struct = fr.verlinde_structure(N, 1)
    assert struct["dim_sym"] == N - 1
    assert fr.verlinde_matches_fusion(struct)


def test_verlinde_oracle_needs_k1():
    struct = fr.verlinde_structure(5, 2)
    with pytest.raises(fr.BadParameters):
        fr.verlinde_matches_fusion(struct)


def test_classify_weight_branches():
    v = fr.classify_weight(Fraction(1, 3), Fraction(1, 5), 4)
    assert v.lambda_class == "regular"
    assert v.family == "Y-principal"
    assert v.dimension == 16
    v = fr.classify_weight(Fraction(1, 4), Fraction(1, 3), 4)
    assert v.lambda_class == "half-singular"
    v = fr.classify_weight(Fraction(1, 2), Fraction(3, 2), 4)
    assert v.lambda_class == "singular"
    v = fr.classify_weight(Fraction(1, 2), 0, 4)
    assert v.family == "unclassified"
    assert "unresolved-by-paper" in v.flags


def test_principal_series():
    mod = fr.principal_series(2, Fraction(1, 3))
    assert mod.dim == 8
    assert mod.notes["relations"].passed
    assert mod.notes["y_simple"]


def test_principal_series_bad_lambda():
    with pytest.raises(fr.BadParameters):
        fr.principal_series(2, 0, lam=Fraction(1, 2))


def test_radical_scalar_product():
    out = fr.radical_of_pairing("scalar_product", {"n": 1, "window": 4})
    assert out["quotient_dim"] == 6
    assert out["window_annihilated"]


def test_radical_eval_pairing():
    out = fr.radical_of_pairing("eval_pairing", {"n": 1, "window": 4})
    assert out["quotient_dim"] == 3
    assert out["window_annihilated"]


def test_radical_needs_specialization():
    with pytest.raises(fr.InfiniteRadicalIndex):
        fr.radical_of_pairing("scalar_product", {})


@pytest.mark.parametrize("N", [3, 4, 5])
def test_exact_sequence_dimensions(N):
    rep = fr.greatsi_report(N)
    assert rep.passed, rep.failures
