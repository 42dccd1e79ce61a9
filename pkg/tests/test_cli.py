"""Command line surface: output shapes, exit codes, determinism."""

import json

import pytest
from click.testing import CliRunner

from daha import cli
from daha.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def payload(res):
    """Drop the diagnostic summary line the runner mixes into stdout."""
    lines = res.output.splitlines()
    while lines and (lines[-1].startswith("ok: ") or lines[-1].startswith("FAIL: ")):
        lines.pop()
    return "\n".join(lines)


def test_poly_json_shape(runner):
    res = runner.invoke(main, ["poly", "e", "-m", "-1", "--format", "json"])
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["X^-1"] == "1"
    assert "X^1" in data


def test_poly_eps_normalized(runner):
    res = runner.invoke(main, ["poly", "eps", "-m", "0"])
    assert res.exit_code == 0
    assert json.loads(res.output) == {"X^0": "1"}


def test_poly_rogers(runner):
    res = runner.invoke(main, ["poly", "rogers", "-m", "1"])
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["X^1"] == "1" and data["X^-1"] == "1"


def test_poly_rejects_bad_kind(runner):
    res = runner.invoke(main, ["poly", "nope", "-m", "1"])
    assert res.exit_code == 2


def test_verify_relations(runner):
    res = runner.invoke(main, ["verify", "relations", "--window", "4"])
    assert res.exit_code == 0


def test_verify_ct_small(runner):
    res = runner.invoke(main, ["verify", "ct", "--order", "4"])
    assert res.exit_code == 0
    reports = json.loads(payload(res))
    assert all(r["verdict"] == "pass" for r in reports)


def test_verify_master(runner):
    res = runner.invoke(
        main, ["verify", "master", "--n", "1", "--m", "1", "--order", "4"]
    )
    assert res.exit_code == 0


def test_gauss_legendre_value(runner):
    res = runner.invoke(main, ["gauss", "legendre", "--m", "3", "--n", "5"])
    assert res.exit_code == 0
    assert res.output.strip() == "-1"


def test_gauss_legendre_rejects_even(runner):
    res = runner.invoke(main, ["gauss", "legendre", "--m", "4", "--n", "5"])
    assert res.exit_code == 2


def test_gauss_tau(runner):
    res = runner.invoke(main, ["gauss", "tau", "--N", "3"])
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["L"] == 12


def test_gauss_truncation(runner):
    res = runner.invoke(main, ["gauss", "truncation", "--N", "3", "--k", "1"])
    assert res.exit_code == 0


def test_rep_build_perfect(runner):
    res = runner.invoke(
        main, ["rep", "build", "--family", "perfect", "--N", "4", "--k", "1"]
    )
    assert res.exit_code == 0
    data = json.loads(payload(res))
    assert data[0]["dimension"] == 4
    assert data[0]["verdict"] == "pass"


def test_rep_gauss_sum_failure_exits_one(runner):
    """No closed form matches on the positive half-integral branch and the
    command says so through its exit status."""
    res = runner.invoke(main, ["rep", "gauss-sum", "--N", "4", "--k", "1/2"])
    assert res.exit_code == 1


def test_rep_verlinde(runner):
    res = runner.invoke(main, ["rep", "verlinde", "--N", "4", "--k", "1"])
    assert res.exit_code == 0


def test_rep_classify(runner):
    res = runner.invoke(
        main, ["rep", "classify", "--lambda", "1/3", "--k", "1/5", "--N", "4"]
    )
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["family"] == "Y-principal"


def test_hankel_truncated(runner):
    res = runner.invoke(main, ["hankel", "truncated", "--n", "2"])
    assert res.exit_code == 0


def test_limit_padic(runner):
    res = runner.invoke(main, ["limit", "padic", "--m", "3"])
    assert res.exit_code == 0


def test_output_file_and_determinism(tmp_path, runner):
    p1 = tmp_path / "a.json"
    p2 = tmp_path / "b.json"
    for p in (p1, p2):
        res = runner.invoke(
            main, ["verify", "ct", "--order", "3", "--output", str(p)]
        )
        assert res.exit_code == 0
    assert p1.read_bytes() == p2.read_bytes()


def test_csv_format(runner):
    res = runner.invoke(main, ["verify", "ct", "--order", "3", "--format", "csv"])
    assert res.exit_code == 0
    lines = res.output.strip().splitlines()
    assert lines[0] == "name,verdict"


def test_emit_report_empty():
    assert cli.render_report([], fmt="json") == "[]\n"


def test_first_failure_summary():
    good = {"name": "ok-item", "verdict": "pass"}
    bad = {"name": "bad-item", "verdict": "fail"}
    assert cli._first_failure([good, bad]) == "bad-item"
    assert cli._first_failure([good]) is None


def test_suite_small_serial(runner):
    res = runner.invoke(
        main,
        [
            "verify",
            "suite",
            "--max-degree",
            "3",
            "--series-order",
            "6",
            "--parallelism",
            "1",
        ],
    )
    assert res.exit_code == 0, res.output


def test_suite_bad_config(runner):
    res = runner.invoke(main, ["verify", "suite", "--max-degree", "0"])
    assert res.exit_code == 2
