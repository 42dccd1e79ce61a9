"""Formal q -> infinity limits of the exact rank-one theory.

Everything here is leading-coefficient extraction: an element of the
generic coefficient field Q(q^{1/4}, t^{1/2}) is viewed as a rational
function in q over Q(t^{1/2}) and its "limit" is the ratio of the two
leading q-coefficients when the q-degrees of numerator and denominator
agree, zero when the numerator lags, and divergent otherwise.  No
analytic topology is involved.

The two verifiers exercise the classical spherical-function picture
that the limits land in:

* verify_matsumoto_recursion checks that the conjugated normalized
  eigenpolynomials eps_m^* degenerate, coefficient by coefficient, to
  the spherical functions phi_m, and that multiplication by X turns
  into the two-term recursion
      X eps*_{-m} = t^{1/2} eps*_{-m-1} - (t^{1/2}-t^{-1/2}) eps*_{m+1}.
* limit_pairings checks the limits of the weight mu^1, of the Gram
  matrix of the normalized delta functions, of the coefficients of the
  weight mu^0, and of the finite-window T/Y/pi matrices of the
  functional (delta-function) model.

Gaussian-type diagonals q^{m^2/4} t^{|m|/2} have no limit; asking for
one raises DivergentCoefficient, which is the intended behaviour.
"""

from dataclasses import dataclass
from fractions import Fraction
import random

from .coeffs import TwoParamField
from .fin_reps import WeightLabel, _gaussian_values, _mu1_values
from .laurent import LaurentPoly
from .macdonald import eps_poly, mu0_coeff, pieri
from .rational_daha import CheckReport

HALF = Fraction(1, 2)


class DivergentCoefficient(Exception):
    """A requested limit grows with q (leading q-degree of the numerator
    exceeds that of the denominator)."""


@dataclass(frozen=True)
class LimitValue:
    """Outcome of one leading-coefficient extraction.

    kind is "finite", "zero" or "divergent"; value is an element of the
    ambient field (q-free) for the first two kinds and None otherwise.
    """

    kind: str
    value: object = None

    @property
    def finite(self):
        return self.kind != "divergent"

    def unwrap(self, what="expression"):
        if self.kind == "divergent":
            raise DivergentCoefficient("%s has no limit" % what)
        return self.value


def generic_field():
    """The generic two-parameter coefficient field used by the verifiers."""
    return TwoParamField(4)


def _leading_slice(fld, poly):
    """(q-degree, leading q-coefficient) of a sparse numerator or
    denominator polynomial in the internal generators (a, b)."""
    terms = poly.terms()
    deg = max(i for (i, _), _ in terms)
    acc = fld.zero
    for (i, j), c in terms:
        if i == deg:
            frac = Fraction(int(c.numerator), int(c.denominator))
            acc = acc + fld.monomial(Fraction(0), Fraction(j, 2), frac)
    return deg, acc


def q_limit(fld, f):
    """Limit of a field element as q grows without bound."""
    if fld.is_zero(f):
        return LimitValue("zero", fld.zero)
    dn, ln = _leading_slice(fld, f.numer)
    dd, ld = _leading_slice(fld, f.denom)
    if dn < dd:
        return LimitValue("zero", fld.zero)
    if dn > dd:
        return LimitValue("divergent")
    return LimitValue("finite", ln / ld)


def limit_poly(f):
    """Coefficientwise limit of a Laurent polynomial (vanishing
    coefficients are dropped)."""
    fld = f.fld
    out = LaurentPoly(fld)
    for n, c in f.coeffs.items():
        lv = q_limit(fld, c)
        if lv.kind == "divergent":
            raise DivergentCoefficient("coefficient of X^%d has no limit" % n)
        if lv.kind == "finite" and not fld.is_zero(lv.value):
            out.coeffs[n] = lv.value
    return out


def limit_matrix(fld, mat):
    """Entrywise limit of a matrix over the generic field."""
    out = []
    for i, row in enumerate(mat):
        lrow = []
        for j, entry in enumerate(row):
            lv = q_limit(fld, entry)
            if lv.kind == "divergent":
                raise DivergentCoefficient("entry (%d, %d) has no limit" % (i, j))
            lrow.append(lv.value)
        out.append(lrow)
    return out


def t_flip(fld, f):
    """The substitution t^{1/2} -> t^{-1/2} with q untouched.

    The classical side of the limit picture carries the inverse
    parameter; comparisons against geometric-series data use this map.
    """
    if fld.is_zero(f):
        return fld.zero

    def rebuild(poly):
        acc = fld.zero
        for (i, j), c in poly.terms():
            frac = Fraction(int(c.numerator), int(c.denominator))
            acc = acc + fld.monomial(Fraction(i, fld.u), Fraction(-j, 2), frac)
        return acc

    return rebuild(f.numer) / rebuild(f.denom)


def phi_closed_form(fld, m):
    """phi_m = t^{-m/2} Lambda^{-m} for m >= 0."""
    if m < 0:
        raise ValueError("closed form only covers m >= 0")
    return LaurentPoly.x_pow(fld, -m, fld.monomial(Fraction(0), Fraction(-m, 2)))


def spherical_limit(fld, m):
    """Limit of eps_m^* as a Laurent polynomial in Lambda (= X)."""
    return limit_poly(eps_poly(fld, m).bar())


def verify_matsumoto_recursion(m_max=5):
    """Degeneration of the conjugated eigenpolynomial chain.

    Route one expands eps_m exactly, conjugates, and takes the limit of
    X eps*_{-m} directly.  Route two never expands anything: it takes
    the limits of the two closed-form recursion coefficients.  Both are
    compared against t^{1/2} phi_{-m-1} - (t^{1/2}-t^{-1/2}) phi_{m+1}.
    """
    fld = generic_field()
    th = fld.t_half()
    thi = fld.monomial(Fraction(0), -HALF)
    checks = []

    phi = {m: spherical_limit(fld, m) for m in range(-m_max, m_max + 2)}
    for m in range(0, m_max + 2):
        checks.append(
            ("phi_%d closed form" % m, phi[m] == phi_closed_form(fld, m))
        )

    x = LaurentPoly.x_pow(fld, 1)
    for m in range(0, m_max):
        lhs = limit_poly(x * eps_poly(fld, -m).bar())
        rhs = phi[-m - 1].scale(th) - phi[m + 1].scale(th - thi)
        checks.append(("recursion m=%d" % m, lhs == rhs))

        # closed-form route: the starred recursion is the conjugate of
        # the X^{-1} contiguity relation, so its coefficients are the
        # conjugated contiguity coefficients.
        (i1, c1), (i2, c2) = pieri(fld, -m, "X_inv")
        assert (i1, i2) == (-m - 1, m + 1)
        lim1 = q_limit(fld, fld.bar(c1)).unwrap("first recursion coefficient")
        lim2 = q_limit(fld, fld.bar(c2)).unwrap("second recursion coefficient")
        checks.append(
            ("recursion coefficients m=%d" % m, lim1 == th and lim2 == -(th - thi))
        )

    return CheckReport(name="matsumoto recursion through m=%d" % m_max, checks=checks)


def _window_labels(m_max):
    return [WeightLabel.of(m) for m in range(-m_max - 1, m_max + 2)]


def _window_delta_mats(fld, labels):
    """T, pi and Y on the span of the normalized delta functions
    delta_m^# over a finite symmetric window of labels.

    Images falling outside the window are simply dropped; callers must
    restrict any comparison to columns whose true images stay inside.
    """
    n = len(labels)
    th = fld.t_half()
    thi = fld.monomial(Fraction(0), -HALF)
    mu1 = _mu1_values(fld, labels)
    pos = {lab.m: i for i, lab in enumerate(labels)}

    mt = [[fld.zero for _ in range(n)] for _ in range(n)]
    mpi = [[fld.zero for _ in range(n)] for _ in range(n)]
    for i, lab in enumerate(labels):
        v2 = fld.monomial(2 * lab.qexp, 2 * lab.texp)
        mt[i][i] = mt[i][i] - (th - thi) / (v2 - fld.one)
        amp = (th * v2 - thi) / (v2 - fld.one)
        r = pos.get(-lab.m)
        if r is not None and not fld.is_zero(amp):
            mt[i][r] = mt[i][r] + amp * mu1[i] / mu1[r]
        p = pos.get(1 - lab.m)
        if p is not None:
            mpi[p][i] = fld.one
    my = [
        [
            sum((mpi[i][l] * mt[l][j] for l in range(n)), fld.zero)
            for j in range(n)
        ]
        for i in range(n)
    ]
    return {"T": mt, "pi": mpi, "Y": my}, mu1, pos


def _expected_limit_T(fld, labels, pos):
    th = fld.t_half()
    thi = fld.monomial(Fraction(0), -HALF)
    n = len(labels)
    out = [[fld.zero for _ in range(n)] for _ in range(n)]
    for j, lab in enumerate(labels):
        m = lab.m
        if m >= 0:
            out[pos[-m]][j] = th
        else:
            out[pos[-m]][j] = thi
            out[j][j] = th - thi
    return out


def limit_pairings(m_max=6):
    """Limits of mu^1, of the Gram matrix, of the mu^0 coefficients and
    of the finite-window operator matrices of the delta-function model."""
    fld = generic_field()
    checks = []
    labels = _window_labels(m_max)
    mats, mu1, pos = _window_delta_mats(fld, labels)

    for i, lab in enumerate(labels):
        m = lab.m
        expo = Fraction(m - 1) if m > 0 else Fraction(-m)
        want = fld.monomial(Fraction(0), expo)
        got = q_limit(fld, mu1[i]).unwrap("mu^1(%d_#)" % m)
        checks.append(("mu^1 limit m=%d" % m, got == want))

        gram = q_limit(fld, fld.one / mu1[i]).unwrap("Gram entry m=%d" % m)
        g_expo = Fraction(1 - m) if m > 0 else Fraction(m)
        checks.append(("Gram entry m=%d" % m, gram == fld.monomial(Fraction(0), g_expo)))

    # mu^0: the X^{2m} coefficient dies for m > 0 and the X^{-2m} one
    # tends to (1-t) t^{-m}; after t -> 1/t this is the geometric
    # expansion of (1-L)/(1-tL) in L = X^{-2}.
    geom = {}
    tpow = fld.one
    for m in range(0, m_max + 1):
        geom[m] = tpow  # expansion of 1/(1 - t L)
        tpow = tpow * fld.t()
    for m in range(m_max, 0, -1):
        geom[m] = geom[m] - geom[m - 1]  # multiply by (1 - L)
    for m in range(0, m_max + 1):
        lv = q_limit(fld, mu0_coeff(fld, -m)).unwrap("mu^0 coefficient")
        checks.append(
            ("mu^0 coefficient of X^{-%d}" % (2 * m), t_flip(fld, lv) == geom[m])
        )
        if m > 0:
            pos_lv = q_limit(fld, mu0_coeff(fld, m))
            checks.append(
                (
                    "mu^0 coefficient of X^{%d}" % (2 * m),
                    pos_lv.finite and fld.is_zero(pos_lv.value),
                )
            )

    lim_t = limit_matrix(fld, mats["T"])
    want_t = _expected_limit_T(fld, labels, pos)
    checks.append(("limit of the window T matrix", lim_t == want_t))

    # pi is q-free: delta_m^# -> delta_{1-m}^#, checked away from the
    # window edge whose image was dropped.
    lim_pi = limit_matrix(fld, mats["pi"])
    ok = True
    for j, lab in enumerate(labels):
        if 1 - lab.m not in pos:
            continue
        col = [lim_pi[i][j] for i in range(len(labels))]
        want = [
            fld.one if labels[i].m == 1 - lab.m else fld.zero
            for i in range(len(labels))
        ]
        ok = ok and col == want
    checks.append(("limit of the window pi matrix", ok))

    # Y = pi T, compared column by column against the composition of
    # the displayed limit actions (columns whose T image leaves the
    # window after pi are skipped).
    lim_y = limit_matrix(fld, mats["Y"])
    ok = True
    for j, lab in enumerate(labels):
        m = lab.m
        targets = {-m} if m >= 0 else {-m, m}
        if any(1 - tgt not in pos for tgt in targets):
            continue
        want_col = [fld.zero for _ in labels]
        for i in range(len(labels)):
            if not fld.is_zero(want_t[i][j]):
                want_col[pos[1 - labels[i].m]] = want_t[i][j]
        got_col = [lim_y[i][j] for i in range(len(labels))]
        ok = ok and got_col == want_col
    checks.append(("limit of the window Y matrix", ok))

    return CheckReport(name="limit pairings through m=%d" % m_max, checks=checks)


def gaussian_diverges(m_max=3):
    """The Gaussian diagonal has no limit away from the base point;
    this confirms that asking for one raises DivergentCoefficient."""
    fld = generic_field()
    labels = [WeightLabel.of(m) for m in range(1, m_max + 1)]
    vals, _ = _gaussian_values(fld, labels)
    for v in vals:
        try:
            q_limit(fld, v).unwrap("Gaussian value")
        except DivergentCoefficient:
            continue
        return False
    return True


def random_limit_pairs(count=500, seed=0):
    """Multiplicativity and additivity of q_limit on random pairs with
    finite limits; returns the number of pairs exercised."""
    fld = generic_field()
    rng = random.Random(seed)

    def random_elt():
        acc = fld.zero
        for _ in range(rng.randint(1, 3)):
            acc = acc + fld.monomial(
                Fraction(rng.randint(-4, 4), rng.choice([1, 2, 4])),
                Fraction(rng.randint(-4, 4), 2),
                Fraction(rng.randint(-5, 5), rng.randint(1, 4)),
            )
        return acc

    done = 0
    while done < count:
        f, g = random_elt(), random_elt()
        lf, lg = q_limit(fld, f), q_limit(fld, g)
        if not (lf.finite and lg.finite):
            continue
        lfg = q_limit(fld, f * g)
        if not (lfg.finite and lfg.value == lf.value * lg.value):
            raise AssertionError("q_limit failed multiplicativity")
        lsum = q_limit(fld, f + g)
        if not (lsum.finite and lsum.value == lf.value + lg.value):
            raise AssertionError("q_limit failed additivity")
        done += 1
    return done
