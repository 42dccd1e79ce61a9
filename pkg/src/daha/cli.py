"""Command-line surface for the exact rank-one toolkit.

Subcommands:

* poly    -- coefficient tables of the eigenpolynomial families
* verify  -- identity verifiers (relations, duality, constant-term
             series, master identities, or the full suite)
* gauss   -- cyclotomic Gaussian-sum tools and reciprocity checks
* rep     -- finite-dimensional module builder/inspector, fusion
             tables, weight classification
* hankel  -- rational-degeneration transforms and relation checks
* limit   -- formal large-q degenerations
* suite   -- alias for `verify suite`

Exit codes: 0 all checks pass / output written, 1 an identity check
failed (the report is still emitted), 2 invalid input.  All payloads
are exact strings; serialization is deterministic (sorted keys), so
golden files are byte-stable.  The environment variable
DAHA_SERIES_ORDER overrides the default series truncation order.
"""

import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import click

from . import ct_identities, daha_ops, fin_reps, gauss_sums, padic_limit
from . import macdonald, rational_daha
from .coeffs import TwoParamField
from .laurent import LaurentPoly

DEFAULT_SERIES_ORDER = Fraction(8)


def _series_order_default():
    raw = os.environ.get("DAHA_SERIES_ORDER")
    if raw is None:
        return DEFAULT_SERIES_ORDER
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise click.UsageError("DAHA_SERIES_ORDER must be a rational number")


class FractionParam(click.ParamType):
    name = "fraction"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            self.fail("%r is not a rational a/b" % value, param, ctx)


FRACTION = FractionParam()


@dataclass
class SuiteConfig:
    """Configuration of the full verification suite."""

    max_degree: int = 5
    series_order: Fraction = field(default_factory=_series_order_default)
    rep_grid: tuple = ((3, Fraction(1)), (5, Fraction(2)))
    output: str | None = None
    format: str = "json"
    parallelism: int = 0  # 0 = available cores

    def __post_init__(self):
        if self.max_degree < 2:
            raise click.UsageError("max_degree must be at least 2")
        if self.series_order < 2:
            raise click.UsageError("series_order must be at least 2")


# ---------------------------------------------------------------------------
# report plumbing


def _as_report(obj):
    """Normalize verifier outcomes to a JSON-able dict with a verdict."""
    if isinstance(obj, dict):
        out = dict(obj)
    elif hasattr(obj, "to_json"):
        out = obj.to_json()
    elif isinstance(obj, list):  # (label, ok) pairs
        out = {
            "checks": {label: ("pass" if ok else "fail") for label, ok in obj},
            "verdict": "pass" if all(ok for _, ok in obj) else "fail",
        }
    else:
        raise TypeError("cannot serialize %r" % (obj,))
    if "verdict" not in out:
        passed = getattr(obj, "passed", None)
        out["verdict"] = "pass" if passed else "fail"
    return out


def _first_failure(reports):
    for rep in reports:
        if rep.get("verdict") != "pass":
            return rep.get("name", "unnamed check")
        for label, verdict in rep.get("checks", {}).items():
            if verdict != "pass":
                return label
    return None


def render_report(reports, fmt="json"):
    """Deterministic serialization of a list of report dicts."""
    if fmt == "json":
        return json.dumps(reports, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["name", "verdict"])
        for rep in reports:
            writer.writerow([rep.get("name", ""), rep.get("verdict", "")])
        return buf.getvalue()
    if fmt == "text":
        lines = [
            "%s: %s" % (rep.get("name", "unnamed"), rep.get("verdict", "?"))
            for rep in reports
        ]
        return "\n".join(lines) + ("\n" if lines else "")
    raise click.UsageError("format must be json, csv or text")


def emit_report(reports, output=None, fmt="json"):
    """Write reports and a summary line; return True iff all passed.

    The payload goes to the output path (or stdout); the summary line
    goes to the diagnostic stream so golden files stay byte-stable.
    """
    reports = [_as_report(r) for r in reports]
    payload = render_report(reports, fmt)
    if output:
        with open(output, "w") as fh:
            fh.write(payload)
    else:
        click.echo(payload, nl=False)
    bad = _first_failure(reports)
    if bad is None:
        click.echo("ok: %d report(s)" % len(reports), err=True)
        return True
    click.echo("FAIL: %s" % bad, err=True)
    return False


def _finish(ctx, reports, output=None, fmt="json"):
    ok = emit_report(reports, output=output, fmt=fmt)
    ctx.exit(0 if ok else 1)


# ---------------------------------------------------------------------------
# suite items (top-level functions so process pools can import them)


def _named(name, report):
    out = _as_report(report)
    out.setdefault("name", name)
    out["name"] = out.get("name") or name
    return out


def _item_relations(max_degree):
    fld = TwoParamField(4)
    return _named(
        "operator relations", daha_ops.check_relations(fld, max_degree + 2)
    )


def _item_duality(max_degree):
    fld = TwoParamField(16)
    eps = {m: macdonald.eps_poly(fld, m) for m in range(-max_degree, max_degree + 1)}
    checks = []
    for m in range(-max_degree, max_degree + 1):
        for n in range(m, max_degree + 1):
            lhs = macdonald.eval_at_sharp(eps[m], n)
            rhs = macdonald.eval_at_sharp(eps[n], m)
            checks.append(("eps_%d(%d_#) = eps_%d(%d_#)" % (m, n, n, m), lhs == rhs))
    return _named("evaluation symmetry", checks)


def _item_pieri(max_degree):
    fld = TwoParamField(4)
    x = LaurentPoly.x_pow(fld, 1)
    xi = LaurentPoly.x_pow(fld, -1)
    checks = []
    for m in range(-max_degree, max_degree + 1):
        for direction, mult in (("X", x), ("X_inv", xi)):
            combo = LaurentPoly.zero(fld)
            for idx, c in macdonald.pieri(fld, m, direction):
                combo = combo + macdonald.eps_poly(fld, idx).scale(c)
            checks.append(
                ("%s eps_%d" % (direction, m), mult * macdonald.eps_poly(fld, m) == combo)
            )
    return _named("contiguity relations", checks)


def _item_norms(max_degree):
    fld = TwoParamField(4)
    checks = []
    for m in range(-max_degree, max_degree + 1):
        eps = macdonald.eps_poly(fld, m)
        got = macdonald.pairing_mu0(eps, eps)
        checks.append(
            ("norm of eps_%d" % m, got == macdonald.norm_formula(fld, m, "eps"))
        )
    return _named("norm formulas", checks)


def _item_ct(which, order):
    fn = {
        "conjecture": ct_identities.verify_ct_conjecture,
        "recursion": ct_identities.verify_ct_recursion,
        "gauss": ct_identities.verify_gauss_ct,
        "jackson": ct_identities.verify_jackson_identity,
    }[which]
    return _named("constant term: %s" % which, fn(order))


def _item_master(order):
    reports = [
        ct_identities.verify_master_nonsymmetric(1, 1, order),
        ct_identities.verify_symmetric_master(1, 1, order),
    ]
    checks = [(r.name, r.passed) for r in reports]
    return _named("master identities", checks)


def _item_gauss():
    checks = []
    r = gauss_sums.verify_f33(5, 1)
    checks.append(("Jackson truncation N=5 k=1", r.passed))
    r = gauss_sums.verify_f34_f35(4)
    checks.append(("alternating square sums N=4", r.passed))
    r = gauss_sums.verify_G_formula(3, 5)
    checks.append(("quadratic reciprocity seed (3, 5)", r.passed))
    return _named("cyclotomic sums", checks)


def _item_hankel():
    reports = [
        rational_daha.check_hpp_relations(6),
        rational_daha.verify_truncated_plancherel(2),
        rational_daha.verify_master_series(3, 6),
    ]
    checks = [(r.name, r.passed) for r in reports]
    return _named("rational transforms", checks)


def _item_rep(N, k_str):
    mod = fin_reps.build_perfect(N, Fraction(k_str))
    checks = [("relations", fin_reps.check_module_relations(mod).passed)]
    checks.append(("transform tables", fin_reps.verify_fourier(mod).passed))
    checks.append(("norm identities", fin_reps.verify_plancherel(mod).passed))
    return _named("module N=%d k=%s" % (N, k_str), checks)


def _item_verlinde():
    structure = fin_reps.verlinde_structure(4, 1)
    return _named(
        "fusion table N=4",
        [("matches the fusion rule", fin_reps.verlinde_matches_fusion(structure))],
    )


def _item_limit(max_degree):
    reports = [
        padic_limit.verify_matsumoto_recursion(min(max_degree, 5)),
        padic_limit.limit_pairings(min(max_degree, 6)),
    ]
    checks = [(r.name, r.passed) for r in reports]
    return _named("large-q degeneration", checks)


_SUITE_DISPATCH = {
    "relations": _item_relations,
    "duality": _item_duality,
    "pieri": _item_pieri,
    "norms": _item_norms,
    "ct": _item_ct,
    "master": _item_master,
    "gauss": _item_gauss,
    "hankel": _item_hankel,
    "rep": _item_rep,
    "verlinde": _item_verlinde,
    "limit": _item_limit,
}


def _run_item(spec):
    kind, args = spec
    return _SUITE_DISPATCH[kind](*args)


def _suite_specs(cfg):
    d = cfg.max_degree
    m = cfg.series_order
    specs = [
        ("relations", (d,)),
        ("duality", (d,)),
        ("pieri", (d,)),
        ("norms", (d,)),
        ("ct", ("conjecture", m)),
        ("ct", ("recursion", m)),
        ("ct", ("gauss", m)),
        ("ct", ("jackson", m)),
        ("master", (m,)),
        ("gauss", ()),
        ("hankel", ()),
        ("verlinde", ()),
        ("limit", (d,)),
    ]
    for N, k in cfg.rep_grid:
        specs.append(("rep", (N, str(k))))
    return specs


def run_suite(cfg):
    specs = _suite_specs(cfg)
    workers = cfg.parallelism or os.cpu_count() or 1
    if workers <= 1:
        return [_run_item(s) for s in specs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_item, specs))


# ---------------------------------------------------------------------------
# commands


@click.group()
def main():
    """Exact tools for the rank-one double affine Hecke algebra."""


def _field_for(galois):
    if galois not in (4, 16):
        raise click.UsageError("--galois must be 4 or 16")
    return TwoParamField(galois)


_FORMAT = click.option(
    "--format", "fmt", type=click.Choice(["json", "csv", "text"]), default="json"
)
_OUTPUT = click.option("--output", type=click.Path(dir_okay=False), default=None)


@main.command("poly")
@click.argument("kind", type=click.Choice(["e", "eps", "rogers"]))
@click.option("-m", "--m", "m", type=int, required=True)
@click.option("--galois", type=int, default=4, help="denominator of the q-exponent lattice")
@_FORMAT
@_OUTPUT
@click.pass_context
def poly_cmd(ctx, kind, m, galois, fmt, output):
    """Print the coefficient table of e_m, eps_m or the symmetric p_m."""
    fld = _field_for(galois)
    try:
        if kind == "e":
            p = macdonald.e_poly(fld, m).poly
        elif kind == "eps":
            p = macdonald.eps_poly(fld, m)
        else:
            if m < 0:
                raise click.UsageError("the symmetric family needs m >= 0")
            p = macdonald.rogers_poly(fld, m)
    except (macdonald.SingularParameter, macdonald.ZeroEvaluation) as exc:
        raise click.UsageError(str(exc))
    table = p.to_json()
    if fmt == "json":
        payload = json.dumps(table, sort_keys=True, indent=2) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["monomial", "coefficient"])
        for key in sorted(table):
            writer.writerow([key, table[key]])
        payload = buf.getvalue()
    else:
        payload = "".join("%s: %s\n" % (k, table[k]) for k in sorted(table))
    if output:
        with open(output, "w") as fh:
            fh.write(payload)
    else:
        click.echo(payload, nl=False)
    ctx.exit(0)


@main.group("verify")
def verify_group():
    """Run identity verifiers."""


@verify_group.command("relations")
@click.option("--window", type=int, default=8)
@click.option("--galois", type=int, default=4)
@_FORMAT
@_OUTPUT
@click.pass_context
def verify_relations(ctx, window, galois, fmt, output):
    """Defining relations of the operator representation."""
    if window < 2:
        raise click.UsageError("--window must be at least 2")
    fld = _field_for(galois)
    checks = daha_ops.check_relations(fld, window)
    _finish(ctx, [_named("operator relations", checks)], output, fmt)


@verify_group.command("ct")
@click.option("--order", type=FRACTION, default=None)
@click.option(
    "--which",
    type=click.Choice(["all", "conjecture", "recursion", "gauss", "jackson"]),
    default="all",
)
@_FORMAT
@_OUTPUT
@click.pass_context
def verify_ct(ctx, order, which, fmt, output):
    """Constant-term and Jackson-sum series identities."""
    order = order if order is not None else _series_order_default()
    if order < 2:
        raise click.UsageError("--order must be at least 2")
    names = ["conjecture", "recursion", "gauss", "jackson"] if which == "all" else [which]
    _finish(ctx, [_item_ct(n, order) for n in names], output, fmt)


@verify_group.command("master")
@click.option("--n", type=int, default=1)
@click.option("--m", type=int, default=1)
@click.option("--order", type=FRACTION, default=None)
@click.option("--symmetric/--nonsymmetric", default=False)
@_FORMAT
@_OUTPUT
@click.pass_context
def verify_master(ctx, n, m, order, symmetric, fmt, output):
    """Gaussian-weighted master series identity at indices (n, m)."""
    order = order if order is not None else _series_order_default()
    if order < 2:
        raise click.UsageError("--order must be at least 2")
    if symmetric:
        rep = ct_identities.verify_symmetric_master(n, m, order)
    else:
        rep = ct_identities.verify_master_nonsymmetric(n, m, order)
    _finish(ctx, [rep], output, fmt)


@verify_group.command("duality")
@click.option("--max-degree", type=int, default=5)
@_FORMAT
@_OUTPUT
@click.pass_context
def verify_duality(ctx, max_degree, fmt, output):
    """Evaluation symmetry of the normalized eigenpolynomials."""
    if max_degree < 2:
        raise click.UsageError("--max-degree must be at least 2")
    _finish(ctx, [_item_duality(max_degree)], output, fmt)


def _suite_options(fn):
    for deco in (
        click.option("--max-degree", type=int, default=5),
        click.option("--series-order", type=FRACTION, default=None),
        click.option(
            "--rep-grid",
            type=str,
            default="3:1,5:2",
            help="comma-separated N:k pairs for the module checks",
        ),
        click.option("--parallelism", type=int, default=0),
        _FORMAT,
        _OUTPUT,
    ):
        fn = deco(fn)
    return fn


def _parse_rep_grid(raw):
    grid = []
    for chunk in raw.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            n_str, k_str = chunk.split(":")
            grid.append((int(n_str), Fraction(k_str)))
        except (ValueError, ZeroDivisionError):
            raise click.UsageError("rep grid entries must look like N:k")
    return tuple(grid)


def _suite_impl(ctx, max_degree, series_order, rep_grid, parallelism, fmt, output):
    cfg = SuiteConfig(
        max_degree=max_degree,
        series_order=series_order if series_order is not None else _series_order_default(),
        rep_grid=_parse_rep_grid(rep_grid),
        output=output,
        format=fmt,
        parallelism=parallelism,
    )
    _finish(ctx, run_suite(cfg), cfg.output, cfg.format)


@verify_group.command("suite")
@_suite_options
@click.pass_context
def verify_suite(ctx, max_degree, series_order, rep_grid, parallelism, fmt, output):
    """Run the full verification suite."""
    _suite_impl(ctx, max_degree, series_order, rep_grid, parallelism, fmt, output)


@main.command("suite")
@_suite_options
@click.pass_context
def suite_cmd(ctx, max_degree, series_order, rep_grid, parallelism, fmt, output):
    """Alias for `verify suite`."""
    _suite_impl(ctx, max_degree, series_order, rep_grid, parallelism, fmt, output)


@main.group("gauss")
def gauss_group():
    """Cyclotomic Gaussian sums and reciprocity."""


@gauss_group.command("legendre")
@click.option("--m", type=int, required=True)
@click.option("--n", type=int, required=True)
@click.pass_context
def gauss_legendre(ctx, m, n):
    """Quadratic symbol computed from the Gaussian-sum bracket."""
    try:
        value = gauss_sums.legendre_bracket(m, n)
    except (gauss_sums.BadRange, gauss_sums.NotCoprime, gauss_sums.EvenM,
            gauss_sums.OddN) as exc:
        raise click.UsageError(str(exc))
    if all(c == 0 for c in value.coords[1:]):
        click.echo(str(value.coords[0]))
    else:
        names = {1: "i", 2: "-1", 3: "-i"}
        parts = [
            "%s*%s" % (c, names.get(e, "zeta^%d" % e)) if e else str(c)
            for e, c in enumerate(value.coords)
            if c != 0
        ]
        click.echo(" + ".join(parts))
    ctx.exit(0)


@gauss_group.command("formula")
@click.option("--m", type=int, required=True)
@click.option("--n", type=int, required=True)
@_FORMAT
@_OUTPUT
@click.pass_context
def gauss_formula(ctx, m, n, fmt, output):
    """Closed form of the quadratic Gaussian sum G(m, n)."""
    try:
        rep = gauss_sums.verify_G_formula(m, n)
    except (gauss_sums.BadRange, gauss_sums.NotCoprime, gauss_sums.EvenM,
            gauss_sums.OddN) as exc:
        raise click.UsageError(str(exc))
    _finish(ctx, [rep], output, fmt)


@gauss_group.command("tau")
@click.option("--N", "n_val", type=int, required=True)
@click.pass_context
def gauss_tau_cmd(ctx, n_val):
    """The level-N quadratic sum tau(N) as an exact cyclotomic integer."""
    if n_val < 1:
        raise click.UsageError("--N must be positive")
    click.echo(json.dumps(gauss_sums.gauss_tau(n_val).to_json(), sort_keys=True))
    ctx.exit(0)


@gauss_group.command("truncation")
@click.option("--N", "n_val", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--galois", "unit", type=int, default=1,
              help="which primitive quarter root drives the evaluation")
@_FORMAT
@_OUTPUT
@click.pass_context
def gauss_truncation(ctx, n_val, k, unit, fmt, output):
    """Jackson-sum truncation identity at a 4N-th root of unity."""
    try:
        rep = gauss_sums.verify_f33(n_val, k, unit=unit)
    except (gauss_sums.BadRange, gauss_sums.OddN) as exc:
        raise click.UsageError(str(exc))
    _finish(ctx, [rep], output, fmt)


@main.group("rep")
def rep_group():
    """Finite-dimensional modules."""


@rep_group.command("build")
@click.option(
    "--family",
    type=click.Choice(
        ["v2np1", "v2np1-", "additional", "v2n", "rootc", "perfect", "principal"]
    ),
    required=True,
)
@click.option("--n", type=int, default=None)
@click.option("--N", "n_big", type=int, default=None)
@click.option("--k", type=FRACTION, default=None)
@click.option("--C", "c_val", type=int, default=None)
@click.option("--kappa", type=FRACTION, default=None)
@_FORMAT
@_OUTPUT
@click.pass_context
def rep_build(ctx, family, n, n_big, k, c_val, kappa, fmt, output):
    """Build one module and report its dimension and relation checks."""
    try:
        if family in ("v2np1", "v2np1-"):
            if n is None:
                raise click.UsageError("--n is required for this family")
            mod = fin_reps.build_v2np1(n, sign=-1 if family.endswith("-") else 1)
        elif family == "additional":
            if n is None:
                raise click.UsageError("--n is required for this family")
            mod = fin_reps.build_additional(n)
        elif family == "v2n":
            if n_big is None:
                raise click.UsageError("--N is required for this family")
            if k is None:
                mod = fin_reps.build_root_of_unity(n_big)
            else:
                mod = fin_reps.build_root_of_unity(n_big, k_class=k)
        elif family == "rootc":
            if n_big is None or c_val is None:
                raise click.UsageError("--N and --C are required for this family")
            mod = fin_reps.build_root_of_unity(n_big, C=c_val)
        elif family == "perfect":
            if n_big is None or k is None:
                raise click.UsageError("--N and --k are required for this family")
            mod = fin_reps.build_perfect(n_big, k)
        else:
            if n_big is None:
                raise click.UsageError("--N is required for this family")
            mod = fin_reps.principal_series(n_big, kappa if kappa is not None else Fraction(0))
    except (fin_reps.BadParameters, fin_reps.ReducibleRequest) as exc:
        raise click.UsageError(str(exc))
    except (fin_reps.ChainFailure, fin_reps.SingularChain) as exc:
        click.echo("construction failed: %s" % exc, err=True)
        ctx.exit(1)
    relations = fin_reps.check_module_relations(mod)
    summary = {
        "name": "%s module" % family,
        "family": mod.family,
        "dimension": mod.dim,
        "checks": {label: ("pass" if ok else "fail") for label, ok in relations.checks},
        "verdict": "pass" if relations.passed else "fail",
    }
    _finish(ctx, [summary], output, fmt)


@rep_group.command("verlinde")
@click.option("--N", "n_val", type=int, required=True)
@click.option("--k", type=int, default=1)
@_FORMAT
@_OUTPUT
@click.pass_context
def rep_verlinde(ctx, n_val, k, fmt, output):
    """Multiplication table of the symmetric quotient vs the fusion rule."""
    try:
        structure = fin_reps.verlinde_structure(n_val, k)
    except (fin_reps.BadParameters, fin_reps.MissingData) as exc:
        raise click.UsageError(str(exc))
    ok = fin_reps.verlinde_matches_fusion(structure)
    rep = {
        "name": "fusion table N=%d k=%d" % (n_val, k),
        "level": structure["level"],
        "dimension": structure["dim_sym"],
        "table": {
            "%d,%d" % key: sorted(val) for key, val in structure["table"].items()
        },
        "verdict": "pass" if ok else "fail",
    }
    _finish(ctx, [rep], output, fmt)


@rep_group.command("classify")
@click.option("--lambda", "lam", type=FRACTION, required=True)
@click.option("--k", type=FRACTION, required=True)
@click.option("--N", "n_val", type=int, required=True)
@click.pass_context
def rep_classify(ctx, lam, k, n_val, fmt=None):
    """Classify a spectral parameter for the principal-series picture."""
    verdict = fin_reps.classify_weight(lam, k, n_val)
    click.echo(json.dumps(verdict.to_json(), sort_keys=True, indent=2))
    ctx.exit(0)


@rep_group.command("gauss-sum")
@click.option("--N", "n_val", type=int, required=True)
@click.option("--k", type=FRACTION, required=True)
@_FORMAT
@_OUTPUT
@click.pass_context
def rep_gauss_sum(ctx, n_val, k, fmt, output):
    """Diagonal Gaussian sum of a perfect module vs its closed form."""
    try:
        mod = fin_reps.build_perfect(n_val, k)
    except fin_reps.BadParameters as exc:
        raise click.UsageError(str(exc))
    _finish(ctx, [fin_reps.gaussian_sum_report(mod)], output, fmt)


@main.group("hankel")
def hankel_group():
    """Rational-degeneration transforms."""


@hankel_group.command("truncated")
@click.option("--n", type=int, required=True)
@_FORMAT
@_OUTPUT
@click.pass_context
def hankel_truncated(ctx, n, fmt, output):
    """Truncated transform on the (2n+1)-dimensional quotient."""
    if n < 0:
        raise click.UsageError("--n must be nonnegative")
    _finish(ctx, [rational_daha.verify_truncated_plancherel(n)], output, fmt)


@hankel_group.command("relations")
@click.option("--window", type=int, default=8)
@_FORMAT
@_OUTPUT
@click.pass_context
def hankel_relations(ctx, window, fmt, output):
    """Defining relations and conjugation identities of the rational algebra."""
    if window < 3:
        raise click.UsageError("--window must be at least 3")
    reports = [
        rational_daha.check_hpp_relations(window),
        rational_daha.hankel_conjugation_check(window),
    ]
    _finish(ctx, reports, output, fmt)


@main.group("limit")
def limit_group():
    """Formal large-q degenerations."""


@limit_group.command("padic")
@click.option("--m", type=int, default=4)
@_FORMAT
@_OUTPUT
@click.pass_context
def limit_padic(ctx, m, fmt, output):
    """Spherical recursion and pairing limits up to index m."""
    if m < 1:
        raise click.UsageError("--m must be positive")
    reports = [
        padic_limit.verify_matsumoto_recursion(min(m, 5)),
        padic_limit.limit_pairings(min(m, 6)),
    ]
    _finish(ctx, reports, output, fmt)


if __name__ == "__main__":
    main()
