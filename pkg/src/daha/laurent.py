"""Laurent polynomials in X over a pluggable coefficient field.

X is the exponential coordinate (X = q^x).  The monomial order puts
X^n above X^m when |m| < |n|, with X^{-m} above X^{m} for m > 0.
"""

from __future__ import annotations

from fractions import Fraction


class ZeroPolynomial(Exception):
    pass


class NotSymmetric(Exception):
    pass


class InternalDivisionFailure(Exception):
    """Exact division left a remainder; indicates a bug, not bad input."""


def prec_key(n):
    """Sort key for the monomial order; larger key = higher order."""
    return (abs(n), 0 if n >= 0 else 1)


class LaurentPoly:
    __slots__ = ("fld", "coeffs")

    def __init__(self, fld, coeffs=None):
        self.fld = fld
        self.coeffs = {}
        if coeffs:
            for n, c in coeffs.items():
                if not fld.is_zero(c):
                    self.coeffs[int(n)] = c

    @classmethod
    def zero(cls, fld):
        return cls(fld)

    @classmethod
    def one(cls, fld):
        return cls(fld, {0: fld.one})

    @classmethod
    def x_pow(cls, fld, n, coeff=None):
        return cls(fld, {int(n): coeff if coeff is not None else fld.one})

    def copy(self):
        return LaurentPoly(self.fld, dict(self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self.coeffs)
        for n, c in other.coeffs.items():
            s = out.get(n)
            s = c if s is None else s + c
            if self.fld.is_zero(s):
                out.pop(n, None)
            else:
                out[n] = s
        p = LaurentPoly(self.fld)
        p.coeffs = out
        return p

    def __neg__(self):
        p = LaurentPoly(self.fld)
        p.coeffs = {n: -c for n, c in self.coeffs.items()}
        return p

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            fld = self.fld
            out = {}
            for n1, c1 in self.coeffs.items():
                for n2, c2 in other.coeffs.items():
                    n = n1 + n2
                    c = c1 * c2
                    s = out.get(n)
                    out[n] = c if s is None else s + c
            p = LaurentPoly(fld)
            p.coeffs = {n: c for n, c in out.items() if not fld.is_zero(c)}
            return p
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c):
        """Multiply by a coefficient."""
        fld = self.fld
        if fld.is_zero(c):
            return LaurentPoly(fld)
        p = LaurentPoly(fld)
        p.coeffs = {n: c * v for n, v in self.coeffs.items()}
        return p

    def shift(self, n):
        """Multiply by X^n."""
        p = LaurentPoly(self.fld)
        p.coeffs = {m + n: c for m, c in self.coeffs.items()}
        return p

    def invert_x(self):
        """X -> 1/X (coefficients untouched)."""
        p = LaurentPoly(self.fld)
        p.coeffs = {-n: c for n, c in self.coeffs.items()}
        return p

    def scale_x(self, c):
        """X -> c X, i.e. multiply the X^n coefficient by c^n."""
        p = LaurentPoly(self.fld)
        p.coeffs = {n: v * c ** n for n, v in self.coeffs.items()}
        return p

    def bar(self):
        """X -> 1/X together with the coefficient conjugation."""
        fld = self.fld
        p = LaurentPoly(fld)
        p.coeffs = {-n: fld.bar(c) for n, c in self.coeffs.items()}
        return p

    def conj_coeffs(self):
        fld = self.fld
        p = LaurentPoly(fld)
        p.coeffs = {n: fld.bar(c) for n, c in self.coeffs.items()}
        return p

    def constant_term(self):
        return self.coeffs.get(0, self.fld.zero)

    def coeff(self, n):
        return self.coeffs.get(n, self.fld.zero)

    def leading_term(self):
        if not self.coeffs:
            raise ZeroPolynomial("leading term of 0")
        n = max(self.coeffs, key=prec_key)
        return n, self.coeffs[n]

    def support(self):
        return sorted(self.coeffs)

    def min_exp(self):
        return min(self.coeffs)

    def max_exp(self):
        return max(self.coeffs)

    def evaluate(self, xval):
        """Substitute X = xval (a coefficient field element)."""
        acc = self.fld.zero
        for n, c in self.coeffs.items():
            acc = acc + c * xval ** n
        return acc

    def is_symmetric(self):
        return all(n in self.coeffs or n == 0 for n in map(lambda m: -m, self.coeffs)) and all(
            self.coeffs.get(-n) == c for n, c in self.coeffs.items()
        )

    def substitute_minus_x(self):
        """x -> -x on f(x): X -> X^{-1} without touching coefficients."""
        return self.invert_x()

    def div_exact(self, g):
        """Exact division by a Laurent polynomial; raises on remainder."""
        fld = self.fld
        if not g:
            raise ZeroDivisionError
        if not self:
            return LaurentPoly(fld)
        ga, gb = g.min_exp(), g.max_exp()
        lead = g.coeffs[gb]
        floor = self.min_exp() - ga
        rem = self.copy()
        out = {}
        while rem:
            rb = rem.max_exp()
            n = rb - gb
            if n < floor:
                raise InternalDivisionFailure("remainder is nonzero")
            c = rem.coeffs[rb] / lead
            out[n] = c
            rem = rem - g.shift(n).scale(c)
        p = LaurentPoly(fld)
        p.coeffs = {n: c for n, c in out.items() if not fld.is_zero(c)}
        return p

    def to_json(self):
        fld = self.fld
        keys = sorted(self.coeffs, key=prec_key, reverse=True)
        return {"X^%d" % n: fld.to_str(self.coeffs[n]) for n in keys}

    def __repr__(self):
        if not self.coeffs:
            return "LaurentPoly(0)"
        keys = sorted(self.coeffs, key=prec_key, reverse=True)
        return "LaurentPoly(%s)" % ", ".join(
            "X^%d: %s" % (n, self.fld.to_str(self.coeffs[n])) for n in keys
        )


def constant_term(f):
    return f.constant_term()


def bar(f):
    return f.bar()


def leading_term(f):
    return f.leading_term()


def symmetrize_t(f, t_op):
    """(1+t)^{-1} (1 + t^{1/2} T), the projector onto the T = t^{1/2} line."""
    fld = f.fld
    th = fld.t_half()
    g = f + t_op(f).scale(th)
    return g.scale(fld.one / (fld.one + th * th))
