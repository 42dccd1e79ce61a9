"""Truncated-series verifiers for constant-term and theta-paired identities.

Everything here is exact: both sides of each identity are expanded as
bigraded series in q, t (deg q = deg t = 1) below a truncation order M and
compared term by term.  Theta-type factors q^(j^2/4) t^(-j/2) have total
degree j(j-2)/4 >= -1/4, so each sum has finitely many contributing terms
below any fixed order.

Two independent expansion routes are kept deliberately separate:

* coefficient-side assembly uses TruncSeries together with the closed-form
  Laurent coefficients from the macdonald module;
* product-side right-hand sides are expanded through _BiSeries, a minimal
  bivariate series type that shares no code with TruncSeries.
"""

import hashlib
import math
from dataclasses import dataclass
from fractions import Fraction

from .coeffs import (
    TruncSeries,
    TwoParamField,
    geometric_factor_inverse,
    series_of_coeff,
)
from .laurent import LaurentPoly
from .daha_ops import op_T
from .macdonald import (
    delta0_coeff,
    eps_poly,
    eval_at_sharp,
    mu0_coeff,
    rogers_poly,
    shift_operator,
)


# ---------------------------------------------------------------------------
# reports


@dataclass
class IdentityReport:
    """Outcome of one truncated identity check.

    verdict is "pass" iff lhs - rhs has no term of total degree < order.
    """

    name: str
    order: Fraction
    lhs_digest: str
    rhs_digest: str
    verdict: str
    first_discrepancy: dict | None = None

    @property
    def passed(self):
        return self.verdict == "pass"

    def to_json(self):
        d = {
            "name": self.name,
            "order": str(self.order),
            "lhs_digest": self.lhs_digest,
            "rhs_digest": self.rhs_digest,
            "verdict": self.verdict,
        }
        if self.first_discrepancy is not None:
            d["first_discrepancy"] = dict(self.first_discrepancy)
        return d


def _digest(series):
    items = sorted(series.terms.items())
    blob = ";".join("%s,%s,%s:%s" % (k[0], k[1], k[2], c) for k, c in items)
    return hashlib.sha1(blob.encode()).hexdigest()[:16]


def _report(name, order, lhs, rhs):
    order = Fraction(order)
    lhs = _truncate(lhs, order)
    rhs = _truncate(rhs, order)
    disc = None
    if lhs.terms != rhs.terms:
        keys = set(lhs.terms) | set(rhs.terms)
        bad = sorted(
            k for k in keys if lhs.terms.get(k) != rhs.terms.get(k)
        )
        bad.sort(key=lambda k: (k[0] + k[1], k))
        k = bad[0]
        disc = {
            "qexp": str(k[0]),
            "texp": str(k[1]),
            "lhs": str(lhs.terms.get(k, 0)),
            "rhs": str(rhs.terms.get(k, 0)),
        }
    verdict = "pass" if disc is None else "fail"
    return IdentityReport(name, order, _digest(lhs), _digest(rhs), verdict, disc)


def _truncate(series, order):
    out = TruncSeries(order)
    for key, c in series.terms.items():
        out._add_term(key, c)
    return out


# ---------------------------------------------------------------------------
# product-side expansions (independent of TruncSeries)


class _BiSeries:
    """Bivariate series in q, t truncated by total degree.

    Used only for the product sides of the verifiers, so that the two
    routes of every check share no expansion logic.
    """

    __slots__ = ("order", "terms")

    def __init__(self, order):
        self.order = Fraction(order)
        self.terms = {}

    @classmethod
    def one(cls, order):
        s = cls(order)
        s.terms[(Fraction(0), Fraction(0))] = Fraction(1)
        return s

    def _add(self, qe, te, c):
        if qe + te >= self.order or not c:
            return
        key = (qe, te)
        cur = self.terms.get(key, Fraction(0)) + c
        if cur:
            self.terms[key] = cur
        elif key in self.terms:
            del self.terms[key]

    def times_poly(self, entries):
        """Multiply by a finite sum given as [(qexp, texp, coeff), ...]."""
        out = _BiSeries(self.order)
        for (q1, t1), c1 in self.terms.items():
            for q2, t2, c2 in entries:
                out._add(q1 + Fraction(q2), t1 + Fraction(t2), c1 * Fraction(c2))
        return out

    def times_one_minus(self, qexp, texp, coeff=1):
        return self.times_poly([(0, 0, 1), (qexp, texp, -Fraction(coeff))])

    def times_geom_inverse(self, qexp, texp, coeff=1):
        """Multiply by 1/(1 - c q^a t^b); needs a + b > 0."""
        qexp, texp = Fraction(qexp), Fraction(texp)
        if qexp + texp <= 0:
            raise ValueError("geometric factor needs positive total degree")
        entries = []
        c = Fraction(1)
        mi = 0
        while mi * (qexp + texp) < self.order:
            entries.append((mi * qexp, mi * texp, c))
            c *= Fraction(coeff)
            mi += 1
        return self.times_poly(entries)

    def scaled(self, c):
        out = _BiSeries(self.order)
        out.terms = {k: v * Fraction(c) for k, v in self.terms.items()}
        return out

    def to_trunc(self):
        s = TruncSeries(self.order)
        for (qe, te), c in self.terms.items():
            s._add_term((qe, te, 0), c)
        return s


def _factor_range(order):
    return int(math.ceil(order)) + 1


def ct_mu_product(order):
    """prod_{j>=1} (1-tq^j)^2 / ((1-t^2 q^j)(1-q^j)), expanded."""
    s = _BiSeries.one(order)
    for j in range(1, _factor_range(order)):
        s = s.times_one_minus(j, 1).times_one_minus(j, 1)
        s = s.times_geom_inverse(j, 2).times_geom_inverse(j, 0)
    return s


def ct_recursion_factor(order):
    """(1-t^2 q)(1-t^2 q^2)/(1-tq)^2, expanded."""
    s = _BiSeries.one(order)
    s = s.times_one_minus(1, 2).times_one_minus(2, 2)
    s = s.times_geom_inverse(1, 1).times_geom_inverse(1, 1)
    return s


def gauss_ct_product(order):
    """2 prod_{j>=0} (1-tq^j)/(1-t^2 q^j), expanded."""
    s = _BiSeries.one(order).scaled(2)
    for j in range(_factor_range(order)):
        s = s.times_one_minus(j, 1).times_geom_inverse(j, 2)
    return s


def gamma_mu0_product(order):
    """prod_{j>=1} (1-q^j)/(1-tq^j): the theta pairing of mu^0 against
    the Gaussian sum q^(j^2/4) X^j, in closed product form."""
    s = _BiSeries.one(order)
    for j in range(1, _factor_range(order)):
        s = s.times_one_minus(j, 0).times_geom_inverse(j, 1)
    return s


def jackson_theta_product(order):
    """prod_{j>=1} (1-tq^j)/(1-q^j) times sum_{j in Z} q^(j^2/4) t^(-j/2)."""
    s = _BiSeries.one(order)
    for j in range(1, _factor_range(order)):
        s = s.times_one_minus(j, 1).times_geom_inverse(j, 0)
    theta = []
    j = 0
    while Fraction(j * j - 2 * j, 4) < order:
        theta.append((Fraction(j * j, 4), Fraction(-j, 2), 1))
        if j > 0:
            theta.append((Fraction(j * j, 4), Fraction(j, 2), 1))
        j += 1
    return s.times_poly(theta)


# ---------------------------------------------------------------------------
# coefficient-side expansions


def mu_series(order, shift=0):
    """The weight function expanded directly from its infinite product,
    with X tracked; shift s replaces t by q^s t (parameter raised by s)."""
    s = TruncSeries.constant(order)
    for j in range(_factor_range(order)):
        if j < order:
            s = s * (TruncSeries.constant(order) - TruncSeries.monomial(order, j, 0, 2))
        if j + 1 < order:
            s = s * (TruncSeries.constant(order) - TruncSeries.monomial(order, j + 1, 0, -2))
        s = s * geometric_factor_inverse(order, j + shift, 1, 2)
        s = s * geometric_factor_inverse(order, j + shift + 1, 1, -2)
    return s


def delta_series(order, shift=0):
    """(mu(x) + mu(-x))/(1+t), from the direct product expansion."""
    m = mu_series(order, shift)
    s = m + m.x_invert()
    inv = geometric_factor_inverse(order, shift, 1, 0, coeff=-1)
    return s * inv


def inverse_g_series(order, shift=0):
    """1/g = prod_{j>=0} (1-t^2 q^(2s+j))/(1-t q^(s+j)) for parameter
    shifted by s."""
    s = TruncSeries.constant(order)
    for j in range(_factor_range(order)):
        s = s * (
            TruncSeries.constant(order)
            - TruncSeries.monomial(order, 2 * shift + j, 2, 0)
        )
        s = s * geometric_factor_inverse(order, shift + j, 1, 0)
    return s


def mu0_series(fld, order, mmax):
    """Normalized weight as a series with X tracked, assembled from the
    closed-form Laurent coefficients."""
    s = TruncSeries.constant(order)
    for m in range(1, mmax + 1):
        for sign in (1, -1):
            c = series_of_coeff(fld, mu0_coeff(fld, sign * m), order)
            s = s + c.x_shift(2 * sign * m)
    return s


def delta0_series(fld, order, mmax):
    s = TruncSeries.constant(order)
    for m in range(1, mmax + 1):
        c = series_of_coeff(fld, delta0_coeff(fld, m), order)
        c = c + series_of_coeff(fld, delta0_coeff(fld, -m), order)
        half = c * Fraction(1, 2)
        s = s + half.x_shift(2 * m) + half.x_shift(-2 * m)
    return s


def theta_pair(series):
    """sum_j q^(j^2/4) [X^(-j)] of an X-tracked series."""
    acc = TruncSeries(series.order)
    for j in series.x_support():
        # q^(j^2/4) is even in j, so summing layer by layer is the same
        # as pairing X^j against X^(-j)
        gau = TruncSeries.monomial(series.order, Fraction(j * j, 4))
        acc = acc + gau * series.coeff_x(j)
    return acc


def laurent_to_series(f, order):
    """Expand a Laurent polynomial over the two-parameter field into a
    TruncSeries with X tracked."""
    acc = TruncSeries(order)
    for n, c in f.coeffs.items():
        acc = acc + series_of_coeff(f.fld, c, order).x_shift(n)
    return acc


def _auto_mmax(order, extra=0):
    return int(math.isqrt(int(math.ceil(order)))) + extra + 3


def _min_degree(fld, c):
    """Minimal total q,t-degree of the series expansion of a field element."""
    num = min(qe + te for qe, te, _ in fld.terms_qt(c.numer))
    den = min(qe + te for qe, te, _ in fld.terms_qt(c.denom))
    return num - den


def _neg_span(fld, elts):
    """How far below degree zero the expansions of the given nonzero field
    elements reach; used to pad truncation orders so that products stay
    reliable below the reported order."""
    span = Fraction(0)
    for c in elts:
        if not fld.is_zero(c):
            span = max(span, -_min_degree(fld, c))
    return span


# ---------------------------------------------------------------------------
# verifiers


def verify_ct_conjecture(M):
    """CT of the direct product expansion of the weight equals the closed
    q-product, below total degree M."""
    lhs = mu_series(M).constant_term_x()
    rhs = ct_mu_product(M).to_trunc()
    return _report("ct_conjecture", M, lhs, rhs)


def verify_ct_recursion(M):
    """Raising the parameter by one multiplies the constant term by
    (1-t^2 q)(1-t^2 q^2)/(1-tq)^2; both constant terms come from
    independent product expansions."""
    lhs = mu_series(M, shift=1).constant_term_x()
    factor = ct_recursion_factor(M).to_trunc()
    rhs = factor * mu_series(M).constant_term_x()
    return _report("ct_recursion", M, lhs, rhs)


def verify_gauss_ct(M):
    """Theta pairing of the symmetrized weight: sum_n q^(n^2/4) [X^(-n)]
    of delta equals 2 prod_{j>=0} (1-tq^j)/(1-t^2 q^j)."""
    lhs = theta_pair(delta_series(M))
    rhs = gauss_ct_product(M).to_trunc()
    return _report("gauss_ct", M, lhs, rhs)


def jackson_term(order, j):
    """Term j of the Jackson sum, divided by the overall Gaussian factor:
    q^(j^2/4) t^(-j/2) (1-q^j t)/(1-t) prod_{l=1}^j (1-q^(l-1)t^2)/(1-q^l)."""
    s = TruncSeries.constant(order)
    s = s * (TruncSeries.constant(order) - TruncSeries.monomial(order, j, 1, 0))
    s = s * geometric_factor_inverse(order, 0, 1, 0)
    for l in range(1, j + 1):
        s = s * (
            TruncSeries.constant(order)
            - TruncSeries.monomial(order, l - 1, 2, 0)
        )
        s = s * geometric_factor_inverse(order, l, 0, 0)
    return s * TruncSeries.monomial(order, Fraction(j * j, 4), Fraction(-j, 2), 0)


def jackson_lhs_series(order):
    acc = TruncSeries(order)
    j = 0
    while Fraction(j * j - 2 * j, 4) < order:
        acc = acc + jackson_term(order, j)
        j += 1
    return acc


def verify_jackson_identity(M):
    """The algebraic Jackson summation, both sides divided by the overall
    Gaussian prefactor; coefficients live in t^(1/2)-Laurent bidegrees."""
    pad = Fraction(M) + Fraction(1, 2)
    lhs = jackson_lhs_series(pad)
    rhs = jackson_theta_product(pad).to_trunc()
    return _report("jackson", M, lhs, rhs)


def jackson_prefactor(fld, j):
    """The rational prefactor of Jackson term j as a field element."""
    one = fld.one
    num = one - fld.monomial(j, 1)
    den = one - fld.t()
    for l in range(1, j + 1):
        num = num * (one - fld.monomial(l - 1, 2))
        den = den * (one - fld.monomial(l))
    return num / den


def jackson_prefactor_at_t_one(j):
    """Every Jackson prefactor specializes to 2 at t=1 (to 1 for j=0),
    which collapses the identity to the plain theta symmetry."""
    fld = TwoParamField(4)
    return fld.specialize_b(jackson_prefactor(fld, j), 1)


def verify_jackson_t_q(M):
    """Specialization t=q: both sides, after t -> q, agree with the
    directly built series sum_j q^((j^2-2j)/4) (1-q^(j+1))^2/(1-q)^2."""
    pad = Fraction(M) + Fraction(1, 2)
    lhs = jackson_lhs_series(pad).subs_t_to_q_power(1)
    rhs = jackson_theta_product(pad).to_trunc().subs_t_to_q_power(1)
    direct = TruncSeries(pad)
    j = 0
    while Fraction(j * j - 2 * j, 4) < pad:
        term = TruncSeries.monomial(pad, Fraction(j * j - 2 * j, 4))
        term = term * (
            TruncSeries.constant(pad)
            - TruncSeries.monomial(pad, j + 1, 0, 0, 2)
            + TruncSeries.monomial(pad, 2 * (j + 1))
        )
        term = term * geometric_factor_inverse(pad, 1, 0)
        term = term * geometric_factor_inverse(pad, 1, 0)
        direct = direct + term
        j += 1
    rep = _report("jackson_t_q", M, lhs, rhs)
    if rep.passed:
        rep = _report("jackson_t_q", M, lhs, direct)
    return rep


def psi_series(f, order, shift=0):
    """The q-Mellin functional on a Laurent polynomial: CT(f delta)/g as a
    q,t-series, with the parameter raised by the given shift."""
    dser = delta_series(order, shift)
    acc = TruncSeries(order)
    for n, c in f.coeffs.items():
        acc = acc + series_of_coeff(f.fld, c, order) * dser.coeff_x(-n)
    return acc * inverse_g_series(order, shift)


def gaussian_truncation(fld, jmax):
    """sum_{|j| <= jmax} q^(j^2/4) X^j, the standard test function for the
    shift recursion."""
    f = LaurentPoly.zero(fld)
    for j in range(-jmax, jmax + 1):
        f = f + LaurentPoly.x_pow(fld, j).scale(fld.monomial(Fraction(j * j, 4)))
    return f


def verify_shift_recursion(M, f=None):
    """Psi(f) = (1-qt) Psi'(f) + q^(3/2) t Psi''(S^2 f), where primes raise
    the parameter and S is the divided-difference shift operator."""
    fld = TwoParamField(4)
    if f is None:
        f = LaurentPoly.one(fld)
    s2f = shift_operator(shift_operator(f))
    lhs = psi_series(f, M)
    one_minus_qt = TruncSeries.constant(M) - TruncSeries.monomial(M, 1, 1, 0)
    rhs = one_minus_qt * psi_series(f, M, shift=1)
    rhs = rhs + TruncSeries.monomial(M, Fraction(3, 2), 1, 0) * psi_series(
        s2f, M, shift=2
    )
    return _report("shift_recursion", M, lhs, rhs)


def gamma_pair_mu0(f, order):
    """<f gamma-hat mu^0> as a series: the theta pairing of f against the
    normalized weight assembled from closed-form coefficients."""
    fld = f.fld
    spread = max((abs(n) for n in f.coeffs), default=0)
    mser = mu0_series(fld, order, _auto_mmax(order, spread))
    return theta_pair(laurent_to_series(f, order) * mser)


def gamma_pair_delta0(f, order):
    fld = f.fld
    spread = max((abs(n) for n in f.coeffs), default=0)
    dser = delta0_series(fld, order, _auto_mmax(order, spread))
    return theta_pair(laurent_to_series(f, order) * dser)


MASTER_VARIANTS = ("plain", "bar", "twisted")


def verify_master_nonsymmetric(n, m, M, variant="plain"):
    """Theta-paired bilinear form of two normalized eigenpolynomials
    collapses to a single spectral evaluation times the pairing of the
    weight itself.

    plain:   <eps_n eps_m ...>       ~ eps_m(n_#)
    bar:     <eps_n bar(eps_m) ...>  ~ bar(eps_m)(n_#)
    twisted: <bar(eps_n) bar(eps_m) ...> ~ t^(-1/2) (T bar(eps_m))(n_#)
    """
    if variant not in MASTER_VARIANTS:
        raise ValueError("unknown variant %r" % (variant,))
    fld = TwoParamField(4)
    en = eps_poly(fld, n)
    em = eps_poly(fld, m)
    if variant == "plain":
        f = en * em
        ev = eval_at_sharp(em, n)
    elif variant == "bar":
        f = en * em.bar()
        ev = eval_at_sharp(em.bar(), n)
    else:
        f = en.bar() * em.bar()
        ev = eval_at_sharp(op_T(em.bar()), n) * fld.monomial(0, Fraction(-1, 2))
    coeff = fld.monomial(
        Fraction(m * m + n * n, 4), Fraction(abs(m) + abs(n), 2)
    )
    pad = M + _neg_span(fld, list(f.coeffs.values()) + [coeff * ev])
    lhs = gamma_pair_mu0(f, pad)
    rhs = series_of_coeff(fld, coeff * ev, pad) * gamma_mu0_product(pad).to_trunc()
    return _report("master_%s_n%d_m%d" % (variant, n, m), M, lhs, rhs)


def verify_symmetric_master(n, m, M):
    """Symmetric analogue with Rogers polynomials and the even weight:
    <p_n p_m ...> ~ p_n(q^m t^(1/2)) p_m(t^(1/2))."""
    fld = TwoParamField(4)
    pn = rogers_poly(fld, n)
    pm = rogers_poly(fld, m)
    f = pn * pm
    ev = pn.evaluate(fld.monomial(Fraction(m, 2), Fraction(1, 2)))
    ev = ev * pm.evaluate(fld.monomial(0, Fraction(1, 2)))
    coeff = fld.monomial(Fraction(m * m + n * n, 4), Fraction(m + n, 2))
    pad = M + _neg_span(fld, list(f.coeffs.values()) + [coeff * ev])
    lhs = gamma_pair_delta0(f, pad)
    rhs = series_of_coeff(fld, coeff * ev, pad) * gamma_mu0_product(pad).to_trunc()
    return _report("symmetric_master_n%d_m%d" % (n, m), M, lhs, rhs)
