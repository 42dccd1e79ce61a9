"""Nonsymmetric Macdonald polynomials e_n, spherical eps_n, Rogers p_n.

Conventions.  t = q^k is formal (a field element); the parameter shift
k -> k+1 is the substitution t -> qt.  The spectral point attached to an
index n is n_# = (n + sgn(n) k)/2 with sgn(0) = -1, so evaluation at m_#
means X -> q^{m/2} t^{sgn(m)/2}, and X -> t^{-1/2} for m = 0.

e_n are built exclusively through the intertwiner chain

    1 = e_0 -> e_1 -> e_{-1} -> e_2 -> e_{-2} -> ...

with the raising step q^{-m/2} X pi and the lowering step
t^{1/2}(T + (t^{1/2}-t^{-1/2})/(q^m t - 1)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .laurent import LaurentPoly
from . import daha_ops


class SingularParameter(Exception):
    pass


class ZeroEvaluation(Exception):
    pass


class SingularPieri(Exception):
    pass


HALF = Fraction(1, 2)


def sgn(n):
    return -1 if n <= 0 else 1


def sharp_exponents(m):
    """(qexp, texp) with q^{m_#} = q^qexp t^texp."""
    return (Fraction(m, 2), Fraction(sgn(m), 2))


def spectral_point(fld, m):
    qe, te = sharp_exponents(m)
    return fld.monomial(qe, te)


def eval_at_sharp(f, m):
    return f.evaluate(spectral_point(f.fld, m))


@dataclass
class EPolyRecord:
    index: int
    poly: LaurentPoly
    eigenvalue: object
    evaluation: object


def mu0_coeff(fld, m):
    """Laurent coefficient of X^{2m} in mu^0 (the normalized weight).

    coeff(X^{2m}) = prod_{i<m} (t - q^i) / prod_{1<=i<=m} (1 - t q^i) for
    m >= 0, and coeff(X^{-2m}) = q^m coeff(X^{2m}).
    """
    mm = abs(m)
    num = fld.one
    den = fld.one
    for i in range(mm):
        num = num * (fld.t() - fld.monomial(i))
    for i in range(1, mm + 1):
        den = den * (fld.one - fld.monomial(i, 1))
    c = num / den
    if m < 0:
        c = c * fld.monomial(mm)
    return c


def delta0_coeff(fld, m):
    """Coefficient of X^{2m} in delta^0 = (mu^0(x) + mu^0(-x))/2."""
    two = fld.from_int(2)
    return (mu0_coeff(fld, m) + mu0_coeff(fld, -m)) / two


def ct_mu0(h):
    """<h mu^0> for a Laurent polynomial h, via the 1Psi1 coefficients."""
    fld = h.fld
    acc = fld.zero
    for n, c in h.coeffs.items():
        if n % 2 == 0:
            acc = acc + c * mu0_coeff(fld, -n // 2)
    return acc


def ct_delta0(h):
    fld = h.fld
    acc = fld.zero
    for n, c in h.coeffs.items():
        if n % 2 == 0:
            acc = acc + c * delta0_coeff(fld, -n // 2)
    return acc


def pairing_mu0(f, g):
    """<f, g>_0 = <f bar(g) mu^0>."""
    return ct_mu0(f * g.bar())


def _e_cache(fld):
    cache = getattr(fld, "_e_poly_cache", None)
    if cache is None:
        cache = {0: LaurentPoly.one(fld)}
        fld._e_poly_cache = cache
    return cache


def _e_raw(fld, n):
    cache = _e_cache(fld)
    if n in cache:
        return cache[n]
    # chain order: indices by distance from 0, positive first
    order = [0]
    for m in range(1, abs(n) + 1):
        order.extend([m, -m])
    for idx in order:
        if idx in cache:
            continue
        if idx > 0:
            prev = cache[1 - idx]
            try:
                cur = daha_ops.intertwiner_A(1 - idx, prev)
            except ValueError as exc:
                raise SingularParameter(str(exc)) from None
        else:
            prev = cache[-idx]
            try:
                cur = daha_ops.intertwiner_B(-idx, prev)
            except daha_ops.SingularIntertwiner as exc:
                raise SingularParameter(str(exc)) from None
        lead, c = cur.leading_term()
        if lead != idx or c != fld.one:
            raise SingularParameter(
                "chain broke at index %d (leading X^%d)" % (idx, lead)
            )
        cache[idx] = cur
        if idx == n:
            break
    return cache[n]


def e_poly(fld, n):
    poly = _e_raw(fld, n)
    qe, te = sharp_exponents(n)
    eig = fld.monomial(-qe, -te)
    ev = poly.evaluate(fld.monomial(0, -HALF))
    return EPolyRecord(index=n, poly=poly, eigenvalue=eig, evaluation=ev)


def eps_poly(fld, n):
    rec = e_poly(fld, n)
    if fld.is_zero(rec.evaluation):
        raise ZeroEvaluation("e_%d vanishes at the base point" % n)
    return rec.poly.scale(fld.one / rec.evaluation)


def evaluation_formula(fld, m):
    """Closed form for e_m(-k/2) = e_m at X = t^{-1/2}."""
    mp = m if m > 0 else 1 - m
    acc = fld.monomial(0, Fraction(-abs(m), 2))
    for j in range(1, mp):
        acc = acc * (fld.one - fld.monomial(j, 1) * fld.t()) / (fld.one - fld.monomial(j, 1))
    return acc


def norm_formula(fld, m, variant="eps"):
    """Closed forms for <eps_m, eps_m>_0 and <e_m, e_m>_0."""
    mp = m if m > 0 else 1 - m
    acc = fld.one
    if variant == "eps":
        for j in range(1, mp):
            acc = acc * (fld.one - fld.monomial(j)) / (
                fld.monomial(0, -1) - fld.monomial(j, 1)
            )
        return acc
    if variant == "e":
        for j in range(1, mp):
            acc = acc * (fld.one - fld.monomial(j)) * (
                fld.one - fld.monomial(j, 2)
            ) / (fld.one - fld.monomial(j, 1)) ** 2
        return acc
    raise ValueError("variant must be eps or e")


def pieri(fld, m, direction):
    """X^{+-1} eps_m as a combination [(index, coeff), (index, coeff)].

    nu = 1 for m <= 0 and -1 otherwise.
    """
    nu = 1 if m <= 0 else -1
    th = fld.t_half()
    thi = fld.monomial(0, -HALF)
    if direction == "X":
        den = fld.monomial(-m, nu) - fld.one
        if fld.is_zero(den):
            raise SingularPieri("t^%d q^%d = 1" % (nu, -m))
        c1 = (fld.monomial(-m, nu - HALF) - th) / den
        c2 = -(thi - th) / den
        return [(m + 1, c1), (1 - m, c2)]
    if direction == "X_inv":
        den = fld.monomial(1 - m, nu) - fld.one
        if fld.is_zero(den):
            raise SingularPieri("t^%d q^%d = 1" % (nu, 1 - m))
        c1 = (fld.monomial(1 - m, nu + HALF) - thi) / den
        c2 = -(th - thi) / den
        return [(m - 1, c1), (1 - m, c2)]
    raise ValueError("direction must be X or X_inv")


def rogers_poly(fld, n):
    """Symmetric Macdonald polynomial p_n = (1 + t^{1/2} T) e_n, p_0 = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return LaurentPoly.one(fld)
    e = _e_raw(fld, n)
    return e + daha_ops.op_T(e).scale(fld.t_half())


def op_L(f):
    """The Macdonald difference operator on symmetric polynomials."""
    fld = f.fld
    th = fld.t_half()
    thi = fld.monomial(0, -HALF)
    x = LaurentPoly.x_pow(fld, 1)
    xi = LaurentPoly.x_pow(fld, -1)
    num = (x.scale(th) - xi.scale(thi)) * daha_ops.op_varpi(f) - (
        xi.scale(th) - x.scale(thi)
    ) * daha_ops.op_varpi_inv(f)
    return num.div_exact(x - xi)


def shift_operator(f):
    """S = (varpi^{-1} - varpi)/(X - X^{-1}) on symmetric polynomials."""
    from .laurent import NotSymmetric

    if not f.is_symmetric():
        raise NotSymmetric("shift operator needs f(X) = f(1/X)")
    fld = f.fld
    x = LaurentPoly.x_pow(fld, 1)
    xi = LaurentPoly.x_pow(fld, -1)
    num = daha_ops.op_varpi_inv(f) - daha_ops.op_varpi(f)
    if not num:
        return LaurentPoly.zero(fld)
    return num.div_exact(x - xi)


def conjugated_eps(fld, m):
    """bar(eps_m) with its three equivalent forms cross-checked.

    (a) bar(eps_m) = t^{-1/2} T(eps_m)
    (b) bar(eps_m) = t^{-1/2} X^{-1} eps_{1-m}
    (c) X T(eps_m) = eps_{1-m}
    """
    eps = eps_poly(fld, m)
    direct = eps.bar()
    thi = fld.monomial(0, -HALF)
    via_a = daha_ops.op_T(eps).scale(thi)
    eps1m = eps_poly(fld, 1 - m)
    via_b = eps1m.shift(-1).scale(thi)
    if direct != via_a or direct != via_b:
        raise AssertionError("conjugation identities disagree at m=%d" % m)
    if daha_ops.op_T(eps).shift(1) != eps1m:
        raise AssertionError("X T eps_m != eps_{1-m} at m=%d" % m)
    return direct
