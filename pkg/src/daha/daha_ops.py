"""Operator realization of the rank one double affine Hecke algebra.

The algebra has generators T, X^{+-1}, Y^{+-1} over the field with
q^{1/2}, t^{1/2} and relations

    T X T = X^{-1},   T Y^{-1} T = Y,
    Y^{-1} X^{-1} Y X T^2 q^{1/2} = 1,
    (T - t^{1/2})(T + t^{-1/2}) = 0.

On Laurent polynomials: s(X) = X^{-1}, varpi(X) = q^{1/2} X (the shift
x -> x + 1/2), pi = s varpi with pi^2 = 1, and

    T = t^{1/2} s + (t^{1/2} - t^{-1/2}) (X^2 - 1)^{-1} (s - 1),
    Y = pi T,   Pi = X pi.

The apparent pole of T cancels on every Laurent polynomial; T is
implemented monomial by monomial with the division done in closed form.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentPoly, InternalDivisionFailure


class SingularIntertwiner(Exception):
    pass


class UnknownGenerator(Exception):
    pass


def op_s(f):
    return f.invert_x()


def op_varpi(f):
    return f.scale_x(f.fld.q_half())


def op_varpi_inv(f):
    return f.scale_x(f.fld.monomial(Fraction(-1, 2)))


def op_pi(f):
    """pi(f)(x) = f(1/2 - x); an involution."""
    return op_varpi(f).invert_x()


def op_X(f):
    return f.shift(1)


def op_X_inv(f):
    return f.shift(-1)


def op_T(f):
    """Demazure-Lusztig action, computed monomial by monomial.

    T(X^n) = t^{1/2} X^{-n} - (t^{1/2}-t^{-1/2}) (X^{-n+2i}, i<n sum)  n>0
    T(X^n) = t^{1/2} X^{-n} + (t^{1/2}-t^{-1/2}) (X^{n+2i}, i<-n sum)  n<0
    T(1)   = t^{1/2}
    """
    fld = f.fld
    th = fld.t_half()
    dt = th - fld.monomial(0, Fraction(-1, 2))
    out = LaurentPoly(fld)
    for n, c in f.coeffs.items():
        out = out + LaurentPoly.x_pow(fld, -n, c * th)
        if n > 0:
            tail = LaurentPoly(fld, {-n + 2 * i: -c * dt for i in range(n)})
        elif n < 0:
            tail = LaurentPoly(fld, {n + 2 * i: c * dt for i in range(-n)})
        else:
            continue
        out = out + tail
    return out


def op_T_inv(f):
    """T^{-1} = T - t^{1/2} + t^{-1/2} by the quadratic relation."""
    fld = f.fld
    dt = fld.t_half() - fld.monomial(0, Fraction(-1, 2))
    return op_T(f) - f.scale(dt)


def op_Y(f):
    return op_pi(op_T(f))


def op_Y_inv(f):
    return op_T_inv(op_pi(f))


def op_Pi(f):
    return op_pi(f).shift(1)


_OPS = {
    "s": op_s,
    "pi": op_pi,
    "varpi": op_varpi,
    "varpi_inv": op_varpi_inv,
    "T": op_T,
    "T_inv": op_T_inv,
    "X": op_X,
    "X_inv": op_X_inv,
    "Y": op_Y,
    "Y_inv": op_Y_inv,
    "Pi": op_Pi,
}


def apply(op, f):
    try:
        fn = _OPS[op]
    except KeyError:
        raise UnknownGenerator(op) from None
    return fn(f)


def apply_word(word, f):
    """word: sequence of (gen, exponent); leftmost factor acts last."""
    for gen, e in reversed(list(word)):
        fn = gen if e >= 0 else _INVERSE[gen]
        for _ in range(abs(e)):
            f = apply(fn, f)
    return f


_INVERSE = {
    "T": "T_inv",
    "T_inv": "T",
    "X": "X_inv",
    "X_inv": "X",
    "Y": "Y_inv",
    "Y_inv": "Y",
    "pi": "pi",
    "s": "s",
    "varpi": "varpi_inv",
    "varpi_inv": "varpi",
}


def check_relations(fld, W):
    """Run the defining-relation suite on all monomials X^n, |n| <= W-2.

    Returns a list of (relation name, passed) pairs.
    """
    if W < 2:
        raise ValueError("window too small")
    qh = fld.q_half()
    th = fld.t_half()
    thi = fld.monomial(0, Fraction(-1, 2))
    results = []

    def probe(name, lhs, rhs):
        ok = True
        for n in range(-(W - 2), W - 1):
            f = LaurentPoly.x_pow(fld, n)
            if lhs(f) != rhs(f):
                ok = False
                break
        results.append((name, ok))

    probe("T X T = X^-1", lambda f: op_T(op_X(op_T(f))), op_X_inv)
    probe("T Y^-1 T = Y", lambda f: op_T(op_Y_inv(op_T(f))), op_Y)
    probe(
        "Y^-1 X^-1 Y X T^2 q^(1/2) = 1",
        lambda f: op_Y_inv(op_X_inv(op_Y(op_X(op_T(op_T(f)))))).scale(qh),
        lambda f: f,
    )
    probe(
        "(T - t^(1/2))(T + t^(-1/2)) = 0",
        lambda f: op_T(op_T(f)) - op_T(f).scale(th - thi) - f.scale(th * thi),
        lambda f: LaurentPoly.zero(fld),
    )
    probe("pi^2 = 1", lambda f: op_pi(op_pi(f)), lambda f: f)
    probe(
        "pi X pi = q^(1/2) X^-1",
        lambda f: op_pi(op_X(op_pi(f))),
        lambda f: op_X_inv(f).scale(qh),
    )
    return results


def intertwiner_A(m, f):
    """The raising step e_m -> e_{1-m}: q^{-m/2} X pi."""
    return op_Pi(f).scale(f.fld.monomial(Fraction(-m, 2)))


def intertwiner_B(m, f):
    """The lowering step e_m -> e_{-m} for m > 0.

    e_{-m} = t^{1/2} (T + (t^{1/2}-t^{-1/2})/(q^m t - 1)) e_m; the step is
    singular exactly when q^m t = 1.
    """
    fld = f.fld
    den = fld.monomial(m, 1) - fld.one
    if fld.is_zero(den):
        raise SingularIntertwiner("q^%d t = 1" % m)
    th = fld.t_half()
    c = (th - fld.monomial(0, Fraction(-1, 2))) / den
    return (op_T(f) + f.scale(c)).scale(th)


# ---------------------------------------------------------------------------
# automorphism tables
# ---------------------------------------------------------------------------

# Image of each generator as (coeff, word):
#   coeff = (qexp, texp, sign) meaning sign * q^qexp * t^texp,
#   word  = tuple of (gen, exp).
# Flags: "conj" marks antilinear maps (q^(1/2), t^(1/2) -> inverses),
# "anti" marks anti-homomorphisms (words reverse), "neg_t_half" marks the
# sign twist t^(1/2) -> -t^(1/2).

AUTOMORPHISMS = {
    "tau_plus": {
        "X": ((0, 0, 1), (("X", 1),)),
        "T": ((0, 0, 1), (("T", 1),)),
        "Y": ((Fraction(-1, 4), 0, 1), (("X", 1), ("Y", 1))),
    },
    "tau_minus": {
        "X": ((Fraction(1, 4), 0, 1), (("Y", 1), ("X", 1))),
        "T": ((0, 0, 1), (("T", 1),)),
        "Y": ((0, 0, 1), (("Y", 1),)),
    },
    "sigma": {
        "X": ((0, 0, 1), (("Y", -1),)),
        "T": ((0, 0, 1), (("T", 1),)),
        "Y": ((Fraction(-1, 2), 0, 1), (("Y", -1), ("X", 1), ("Y", 1))),
    },
    "epsilon": {
        "X": ((0, 0, 1), (("Y", 1),)),
        "Y": ((0, 0, 1), (("X", 1),)),
        "T": ((0, 0, 1), (("T", -1),)),
        "_flags": ("conj",),
    },
    "eta": {
        "T": ((0, 0, 1), (("T", -1),)),
        "X": ((0, 0, 1), (("X", -1),)),
        "pi": ((0, 0, 1), (("pi", 1),)),
        "Y": ((0, 0, 1), (("pi", 1), ("T", -1))),
        "_flags": ("conj",),
    },
    "phi": {
        "X": ((0, 0, 1), (("Y", -1),)),
        "Y": ((0, 0, 1), (("X", -1),)),
        "T": ((0, 0, 1), (("T", 1),)),
        "_flags": ("anti",),
    },
    "star": {
        "X": ((0, 0, 1), (("X", -1),)),
        "Y": ((0, 0, 1), (("Y", -1),)),
        "T": ((0, 0, 1), (("T", -1),)),
        "_flags": ("conj", "anti"),
    },
    "diamond": {
        "X": ((0, 0, 1), (("X", 1),)),
        "T": ((0, 0, 1), (("T", 1),)),
        "pi": ((0, 0, 1), (("pi", 1),)),
        "Y": ((0, 0, 1), (("T", 1), ("Y", 1), ("T", -1))),
        "_flags": ("anti",),
    },
    "iota": {
        "X": ((0, 0, 1), (("X", 1),)),
        "Y": ((0, 0, 1), (("Y", 1),)),
        "T": ((0, 0, -1), (("T", 1),)),
        "_flags": ("neg_t_half",),
    },
    "sigma_x": {
        "X": ((0, 0, -1), (("X", 1),)),
        "Y": ((0, 0, 1), (("Y", 1),)),
        "T": ((0, 0, 1), (("T", 1),)),
    },
    "sigma_y": {
        "X": ((0, 0, 1), (("X", 1),)),
        "Y": ((0, 0, -1), (("Y", 1),)),
        "T": ((0, 0, 1), (("T", 1),)),
    },
}


def _coeff_mul(c1, c2):
    return (Fraction(c1[0]) + Fraction(c2[0]), Fraction(c1[1]) + Fraction(c2[1]), c1[2] * c2[2])


def _coeff_inv(c):
    return (-Fraction(c[0]), -Fraction(c[1]), c[2])


def automorphism_flags(name):
    table = AUTOMORPHISMS.get(name)
    if table is None:
        raise UnknownGenerator(name)
    return table.get("_flags", ())


def automorphism_image(name, word):
    """Rewrite a generator word through the named automorphism.

    word: sequence of (gen, exp) over {T, X, Y, pi}.  Returns
    (coeff, new word, flags) with coeff = (qexp, texp, sign).
    """
    table = AUTOMORPHISMS.get(name)
    if table is None:
        raise UnknownGenerator(name)
    flags = table.get("_flags", ())
    coeff = (Fraction(0), Fraction(0), 1)
    out = []
    factors = list(word)
    if "anti" in flags:
        factors = list(reversed(factors))
    for gen, e in factors:
        if gen not in table:
            raise UnknownGenerator(gen)
        c, img = table[gen]
        if e >= 0:
            for _ in range(e):
                coeff = _coeff_mul(coeff, c)
                out.extend(img)
        else:
            inv = [(g, -x) for g, x in reversed(img)]
            for _ in range(-e):
                coeff = _coeff_mul(coeff, _coeff_inv(c))
                out.extend(inv)
    return coeff, tuple(out), flags
