"""Exact coefficient domains.

Everything downstream works over one of a handful of exact fields:

* a generic two-parameter field Q(q^(1/u), t^(1/2)) with u in {4, 16},
  realized as a rational function field in generators a = q^(1/u),
  b = t^(1/2);
* one-parameter specializations of it used by the finite dimensional
  modules (t^(1/2) tied to a power of a, possibly times a Gaussian unit i);
* cyclotomic fields Q(zeta_L), hand rolled over Fraction coordinates;
* univariate rational functions in b = t^(1/2) over a cyclotomic field;
* truncated bigraded formal series in q, t (and the Laurent variable X)
  with deg q = deg t = 1, used by the series identity verifiers.

All field objects expose the same small surface: ``zero``, ``one``,
``from_int``, ``from_fraction``, ``monomial(qexp, texp)``, ``bar`` and
``to_str``.  Elements support the ordinary arithmetic operators.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import sympy
from sympy import QQ, QQ_I
from sympy.polys.fields import field as _frac_field

BigRational = Fraction


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError("expected a rational, got %r" % (x,))


def _fmt_rational(c):
    """Render a Fraction/int as p or p/q."""
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


def _fmt_power(sym, exp):
    exp = Fraction(exp)
    if exp == 0:
        return ""
    if exp == 1:
        return sym
    if exp.denominator == 1:
        return "%s^%d" % (sym, exp.numerator)
    return "%s^(%d/%d)" % (sym, exp.numerator, exp.denominator)


def _fmt_qt_terms(terms):
    """terms: list of (qexp, texp, Fraction coeff), rendered canonically.

    Sorted by total degree, then q-degree, descending.  ASCII only.
    """
    terms = [t for t in terms if t[2] != 0]
    if not terms:
        return "0"
    terms.sort(key=lambda t: (t[0] + t[1], t[0], t[1]), reverse=True)
    out = []
    for qe, te, c in terms:
        mono = "*".join(p for p in (_fmt_power("q", qe), _fmt_power("t", te)) if p)
        mag = abs(c)
        if not mono:
            body = _fmt_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = "%s*%s" % (_fmt_rational(mag), mono)
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append((" + " if c > 0 else " - ") + body)
    return "".join(out)


class _SympyFieldBase:
    """Shared helpers for fields realized as sympy fraction fields."""

    def from_int(self, n):
        return self.field.ground_new(n)

    def from_fraction(self, fr):
        fr = _as_fraction(fr)
        return self.field.ground_new(QQ(fr.numerator, fr.denominator))

    @property
    def zero(self):
        return self.field.zero

    @property
    def one(self):
        return self.field.one

    def is_zero(self, f):
        return not f

    def q(self):
        return self.monomial(Fraction(1), Fraction(0))

    def t(self):
        return self.monomial(Fraction(0), Fraction(1))

    def t_half(self):
        return self.monomial(Fraction(0), Fraction(1, 2))

    def q_half(self):
        return self.monomial(Fraction(1, 2), Fraction(0))


def _ground_to_fraction(dom, c):
    """QQ ground element -> Fraction."""
    c = dom.to_sympy(c)
    return Fraction(int(c.p), int(c.q))


class TwoParamField(_SympyFieldBase):
    """Q(q^(1/u), t^(1/2)) as rational functions in a = q^(1/u), b = t^(1/2).

    u = 4 suffices for the polynomial representation; u = 16 is needed
    whenever the Gaussian weight q^(z^2) is evaluated on half integer
    spectral points, whose squares have denominator 16.
    """

    def __init__(self, u=4):
        if u not in (4, 16):
            raise ValueError("u must be 4 or 16")
        self.u = u
        self.field, self.a, self.b = _frac_field("a,b", QQ)

    def monomial(self, qexp, texp=Fraction(0), coeff=Fraction(1)):
        qexp = _as_fraction(qexp)
        texp = _as_fraction(texp)
        i = qexp * self.u
        j = texp * 2
        if i.denominator != 1:
            raise ValueError("q-exponent %s not a multiple of 1/%d" % (qexp, self.u))
        if j.denominator != 1:
            raise ValueError("t-exponent %s not a multiple of 1/2" % (texp,))
        return self.from_fraction(coeff) * self.a ** int(i) * self.b ** int(j)

    def bar(self, f):
        """The involution a -> 1/a, b -> 1/b (i.e. q, t -> inverses)."""
        if self.is_zero(f):
            return self.zero
        num, an, bn = _reverse_poly(f.numer)
        den, ad, bd = _reverse_poly(f.denom)
        g = self.field.new(num, den)
        return g * self.a ** (ad - an) * self.b ** (bd - bn)

    def specialize_b(self, f, value):
        """Substitute b = value (a rational), staying inside the field."""
        value = _as_fraction(value)
        num = self._eval_b(f.numer, value)
        den = self._eval_b(f.denom, value)
        return num / den

    def _eval_b(self, poly, value):
        acc = self.field.zero
        for (i, j), c in poly.terms():
            acc += (
                self.from_fraction(_ground_to_fraction(QQ, c) * value ** j)
                * self.a ** i
            )
        return acc

    def terms_qt(self, poly):
        """Terms of a numerator/denominator as (qexp, texp, Fraction)."""
        out = []
        for (i, j), c in poly.terms():
            out.append(
                (Fraction(i, self.u), Fraction(j, 2), _ground_to_fraction(QQ, c))
            )
        return out

    def to_str(self, f):
        num = _fmt_qt_terms(self.terms_qt(f.numer))
        den = _fmt_qt_terms(self.terms_qt(f.denom))
        if den == "1":
            return num
        return "(%s)/(%s)" % (num, den)


def _reverse_poly(poly):
    """p(a,b) -> (a^A b^B p(1/a,1/b), A, B) with A, B the max degrees."""
    terms = list(poly.terms())
    A = max(m[0] for m, _ in terms)
    B = max(m[1] for m, _ in terms)
    ring = poly.ring
    out = ring.zero
    for (i, j), c in terms:
        out += ring.term_new((A - i, B - j), c)
    return out, A, B


class OneParamField(_SympyFieldBase):
    """Q(ground)(a) with a = q^(1/u) and t^(1/2) = unit * a^e.

    Covers the k = -1/2 - n family (ground Q, u = 16, unit 1, e = -8n-4)
    and the t = -q^(-n/2) family (ground Q(i), u = 4, unit i, e = -n).
    """

    def __init__(self, u, t_half_exp, unit_is_i=False):
        self.u = u
        self.t_half_exp = int(t_half_exp)
        self.unit_is_i = unit_is_i
        dom = QQ_I if unit_is_i else QQ
        self.dom = dom
        self.field, self.a = _frac_field("a", dom)

    def from_fraction(self, fr):
        fr = _as_fraction(fr)
        return self.field.ground_new(self.dom.convert(QQ(fr.numerator, fr.denominator), QQ))

    def from_int(self, n):
        return self.from_fraction(Fraction(n))

    def i_unit(self):
        if not self.unit_is_i:
            raise ValueError("ground field has no i")
        return self.field.ground_new(self.dom.convert(sympy.I))

    def monomial(self, qexp, texp=Fraction(0), coeff=Fraction(1)):
        qexp = _as_fraction(qexp)
        texp = _as_fraction(texp)
        i = qexp * self.u
        j = texp * 2
        if i.denominator != 1 or j.denominator != 1:
            raise ValueError("exponent not representable: q^%s t^%s" % (qexp, texp))
        f = self.from_fraction(coeff) * self.a ** (int(i) + self.t_half_exp * int(j))
        if self.unit_is_i and int(j) % 4:
            f = f * self.i_unit() ** (int(j) % 4)
        return f

    def _conj_ground(self, c):
        if self.unit_is_i:
            return self.dom.from_sympy(sympy.conjugate(self.dom.to_sympy(c)))
        return c

    def bar(self, f):
        """a -> 1/a with complex conjugation of the ground coefficients."""
        if self.is_zero(f):
            return self.zero
        num, an = self._reverse(f.numer)
        den, ad = self._reverse(f.denom)
        return self.field.new(num, den) * self.a ** (ad - an)

    def _reverse(self, poly):
        terms = list(poly.terms())
        A = max(m[0] for m, _ in terms)
        ring = poly.ring
        out = ring.zero
        for (i,), c in terms:
            out += ring.term_new((A - i,), self._conj_ground(c))
        return out, A

    def to_str(self, f):
        def fmt(poly):
            parts = []
            for (i,), c in sorted(poly.terms(), reverse=True):
                cs = str(self.dom.to_sympy(c)).replace("I", "i").replace(" ", "")
                mono = _fmt_power("q", Fraction(i, self.u))
                if not mono:
                    parts.append(cs)
                elif cs == "1":
                    parts.append(mono)
                elif cs == "-1":
                    parts.append("-" + mono)
                else:
                    parts.append("%s*%s" % (cs, mono))
            return " + ".join(parts) if parts else "0"

        num, den = fmt(f.numer), fmt(f.denom)
        return num if den == "1" else "(%s)/(%s)" % (num, den)


# ---------------------------------------------------------------------------
# cyclotomic fields
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _cyclo_data(L):
    """(degree, reduction rows, power table) for Phi_L.

    reduction rows give x^j for j in [d, 2d-2] as coefficient tuples;
    power table gives x^e mod Phi_L for e in [0, L).
    """
    poly = sympy.cyclotomic_poly(L, sympy.Symbol("x"))
    coeffs = [Fraction(int(c)) for c in sympy.Poly(poly).all_coeffs()]
    d = len(coeffs) - 1
    top = [-c for c in coeffs[1:][::-1]]  # x^d = top[0] + top[1] x + ...
    rows = [tuple(top)]
    for _ in range(d - 2):
        prev = rows[-1]
        nxt = [Fraction(0)] * d
        for i in range(d - 1):
            nxt[i + 1] += prev[i]
        if prev[d - 1]:
            for i in range(d):
                nxt[i] += prev[d - 1] * top[i]
        rows.append(tuple(nxt))
    powers = []
    cur = [Fraction(0)] * d
    cur[0] = Fraction(1)
    for e in range(L):
        powers.append(tuple(cur))
        nxt = [Fraction(0)] * d
        for i in range(d - 1):
            nxt[i + 1] += cur[i]
        if cur[d - 1]:
            for i in range(d):
                nxt[i] += cur[d - 1] * top[i]
        cur = nxt
    return d, tuple(rows), tuple(powers)


class CycloElt:
    """Element of Q(zeta_L), coordinates in the power basis mod Phi_L."""

    __slots__ = ("L", "coords")

    def __init__(self, L, coords):
        self.L = L
        self.coords = tuple(coords)

    def _check(self, other):
        if not isinstance(other, CycloElt):
            if isinstance(other, (int, Fraction)):
                return CycloField(self.L).from_fraction(other)
            return NotImplemented
        if other.L != self.L:
            raise ValueError("mixed cyclotomic levels %d, %d" % (self.L, other.L))
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CycloElt(self.L, [x + y for x, y in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return CycloElt(self.L, [-x for x in self.coords])

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CycloElt(self.L, [x - y for x, y in zip(self.coords, other.coords)])

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloElt(self.L, [x * other for x in self.coords])
        other = self._check(other)
        if other is NotImplemented:
            return other
        d, rows, _ = _cyclo_data(self.L)
        a, b = self.coords, other.coords
        conv = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    conv[i + j] += x * y
        out = conv[:d]
        for j in range(d, 2 * d - 1):
            c = conv[j]
            if c:
                row = rows[j - d]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return CycloElt(self.L, out)

    __rmul__ = __mul__

    def inverse(self):
        d, _, _ = _cyclo_data(self.L)
        phi = _phi_coeffs(self.L)
        inv = _poly_invmod(list(self.coords), phi)
        if inv is None:
            raise ZeroDivisionError("cyclotomic element is zero")
        inv = inv + [Fraction(0)] * (d - len(inv))
        return CycloElt(self.L, inv[:d])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * Fraction(1, 1) * Fraction(other) ** -1
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = CycloField(self.L).one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloField(self.L).from_fraction(other)
        if not isinstance(other, CycloElt):
            return NotImplemented
        return self.L == other.L and self.coords == other.coords

    def __hash__(self):
        return hash((self.L, self.coords))

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return "CycloElt(%d, %s)" % (self.L, list(self.coords))

    def galois(self, u):
        """Apply zeta -> zeta^u; u must be coprime to L."""
        import math

        if math.gcd(u % self.L, self.L) != 1:
            raise ValueError("galois exponent not coprime to level")
        d, _, powers = _cyclo_data(self.L)
        out = [Fraction(0)] * d
        for j, c in enumerate(self.coords):
            if c:
                row = powers[(j * u) % self.L]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return CycloElt(self.L, out)

    def conj(self):
        return self.galois(self.L - 1)

    def to_complex(self):
        import cmath

        z = cmath.exp(2j * cmath.pi / self.L)
        acc = 0j
        for c in reversed(self.coords):
            acc = acc * z + complex(c)
        return acc

    def to_json(self):
        return {"L": self.L, "coords": [_fmt_rational(c) for c in self.coords]}


@lru_cache(maxsize=None)
def _phi_coeffs(L):
    poly = sympy.cyclotomic_poly(L, sympy.Symbol("x"))
    # ascending order
    return [Fraction(int(c)) for c in sympy.Poly(poly).all_coeffs()[::-1]]


def _poly_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _poly_trim(q), _poly_trim(a)


def _poly_invmod(a, mod):
    """Inverse of a modulo mod over Q, or None if a == 0."""
    a = _poly_trim(list(a))
    if not a:
        return None
    r0, r1 = list(mod), a
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        s = _poly_trim(
            [
                (s0[i] if i < len(s0) else Fraction(0))
                - sum(
                    q[j] * s1[i - j]
                    for j in range(max(0, i - len(s1) + 1), min(len(q), i + 1))
                )
                for i in range(max(len(s0), len(q) + len(s1) - 1))
            ]
        )
        r0, r1, s0, s1 = r1, r, s1, s
    # r0 = gcd, a constant for irreducible mod
    if len(r0) != 1:
        raise ArithmeticError("modulus not irreducible?")
    c = 1 / r0[0]
    _, rem = _poly_divmod([x * c for x in s0], mod)
    return rem


class CycloField:
    """Q(zeta_L) as a field object."""

    def __init__(self, L):
        self.L = L
        self.degree = _cyclo_data(L)[0]

    @property
    def zero(self):
        return CycloElt(self.L, [Fraction(0)] * self.degree)

    @property
    def one(self):
        return self.from_fraction(Fraction(1))

    def from_int(self, n):
        return self.from_fraction(Fraction(n))

    def from_fraction(self, fr):
        fr = _as_fraction(fr)
        coords = [Fraction(0)] * self.degree
        coords[0] = fr
        return CycloElt(self.L, coords)

    def zeta(self, exp=1):
        _, _, powers = _cyclo_data(self.L)
        return CycloElt(self.L, powers[exp % self.L])

    def is_zero(self, f):
        return not f

    def bar(self, f):
        return f.conj()

    def to_str(self, f):
        return "zeta_%d:[%s]" % (self.L, ",".join(_fmt_rational(c) for c in f.coords))


class SpecializedCycloField(CycloField):
    """Q(zeta_L) with q^(1/2) a primitive 2N-th root of 1 and t = q^k.

    L must be a multiple of 16 N so that all exponents with denominator up
    to 16 (Gaussian weights on half integer spectral points) make sense.
    """

    def __init__(self, N, k, L=None):
        self.N = int(N)
        self.k = _as_fraction(k)
        if L is None:
            L = 16 * self.N
        if L % (16 * self.N):
            raise ValueError("L must be a multiple of 16N")
        super().__init__(L)

    def monomial(self, qexp, texp=Fraction(0), coeff=Fraction(1)):
        qexp = _as_fraction(qexp)
        texp = _as_fraction(texp)
        e = (qexp + self.k * texp) * self.L / self.N
        if e.denominator != 1:
            raise ValueError("exponent q^%s t^%s not in Z[zeta_%d]" % (qexp, texp, self.L))
        return self.zeta(int(e)) * coeff

    def q(self):
        return self.monomial(Fraction(1))

    def t(self):
        return self.monomial(Fraction(0), Fraction(1))

    def t_half(self):
        return self.monomial(Fraction(0), Fraction(1, 2))

    def q_half(self):
        return self.monomial(Fraction(1, 2))


# ---------------------------------------------------------------------------
# univariate rational functions in b = t^(1/2) over a cyclotomic field
# ---------------------------------------------------------------------------


class UFrac:
    """num/den with dense CycloElt coefficient lists, den monic."""

    __slots__ = ("fld", "num", "den")

    def __init__(self, fld, num, den):
        self.fld = fld
        self.num = num
        self.den = den

    def _coerce(self, other):
        if isinstance(other, UFrac):
            return other
        if isinstance(other, (int, Fraction)):
            return self.fld.from_fraction(other)
        if isinstance(other, CycloElt):
            return self.fld._make([other], [self.fld.ground.one])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        f = self.fld
        num = f._padd(f._pmul(self.num, other.den), f._pmul(other.num, self.den))
        return f._make(num, f._pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return UFrac(self.fld, [-c for c in self.num], self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        f = self.fld
        return f._make(f._pmul(self.num, other.num), f._pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError
        f = self.fld
        return f._make(f._pmul(self.num, other.den), f._pmul(self.den, other.num))

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return (self.fld.one / self) ** (-n)
        out = self.fld.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        f = self.fld
        d = f._padd(f._pmul(self.num, other.den), [-c for c in f._pmul(other.num, self.den)])
        return not d

    def __hash__(self):
        return hash((tuple(self.num), tuple(self.den)))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return "UFrac(%r, %r)" % (self.num, self.den)


class RootOfUnityBField:
    """Q(zeta_2N)(b), q^(1/2) = zeta_2N primitive, b = t^(1/2) free.

    The field for the root-of-unity modules with generic t.
    """

    def __init__(self, N, L=None):
        self.N = int(N)
        self.ground = CycloField(L if L is not None else 2 * self.N)
        self.L = self.ground.L

    # dense polynomial helpers over the cyclotomic ground field

    def _ptrim(self, p):
        while p and not p[-1]:
            p.pop()
        return p

    def _padd(self, a, b):
        n = max(len(a), len(b))
        z = self.ground.zero
        out = [
            (a[i] if i < len(a) else z) + (b[i] if i < len(b) else z) for i in range(n)
        ]
        return self._ptrim(out)

    def _pmul(self, a, b):
        if not a or not b:
            return []
        out = [self.ground.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = out[i + j] + x * y
        return self._ptrim(out)

    def _pdivmod(self, a, b):
        a = list(a)
        inv = b[-1].inverse()
        q = [self.ground.zero] * max(0, len(a) - len(b) + 1)
        for i in range(len(a) - len(b), -1, -1):
            c = a[i + len(b) - 1] * inv
            if c:
                q[i] = c
                for j, bj in enumerate(b):
                    a[i + j] = a[i + j] - c * bj
        return self._ptrim(q), self._ptrim(a)

    def _pgcd(self, a, b):
        a, b = list(a), list(b)
        while b:
            _, r = self._pdivmod(a, b)
            a, b = b, r
        if a:
            inv = a[-1].inverse()
            a = [c * inv for c in a]
        return a

    def _make(self, num, den):
        num = self._ptrim(list(num))
        den = self._ptrim(list(den))
        if not den:
            raise ZeroDivisionError
        if not num:
            return UFrac(self, [], [self.ground.one])
        g = self._pgcd(num, den)
        if len(g) > 1:
            num, _ = self._pdivmod(num, g)
            den, _ = self._pdivmod(den, g)
        inv = den[-1].inverse()
        num = [c * inv for c in num]
        den = [c * inv for c in den]
        return UFrac(self, num, den)

    @property
    def zero(self):
        return UFrac(self, [], [self.ground.one])

    @property
    def one(self):
        return UFrac(self, [self.ground.one], [self.ground.one])

    def from_int(self, n):
        return self.from_fraction(Fraction(n))

    def from_fraction(self, fr):
        fr = _as_fraction(fr)
        if not fr:
            return self.zero
        return UFrac(self, [self.ground.from_fraction(fr)], [self.ground.one])

    def from_ground(self, c):
        if not c:
            return self.zero
        return UFrac(self, [c], [self.ground.one])

    def b_pow(self, j):
        j = int(j)
        one = self.ground.one
        if j >= 0:
            return UFrac(self, [self.ground.zero] * j + [one], [one])
        return UFrac(self, [one], [self.ground.zero] * (-j) + [one])

    def monomial(self, qexp, texp=Fraction(0), coeff=Fraction(1)):
        qexp = _as_fraction(qexp)
        texp = _as_fraction(texp)
        e = qexp * self.L // self.N
        j = texp * 2
        if e.denominator != 1 or j.denominator != 1:
            raise ValueError("bad exponent q^%s t^%s" % (qexp, texp))
        return self.from_ground(self.ground.zeta(int(e)) * coeff) * self.b_pow(int(j))

    def q(self):
        return self.monomial(Fraction(1))

    def q_half(self):
        return self.monomial(Fraction(1, 2))

    def t(self):
        return self.b_pow(2)

    def t_half(self):
        return self.b_pow(1)

    def is_zero(self, f):
        return not f

    def bar(self, f):
        """b -> 1/b with zeta -> 1/zeta on the ground coefficients."""
        num = [c.conj() for c in f.num][::-1]
        den = [c.conj() for c in f.den][::-1]
        dn = len(f.num) - 1
        dd = len(f.den) - 1
        # pad so both reversals are polynomials of the stated degree
        out = self._make(num, den)
        return out * self.b_pow(dd - dn)

    def specialize_b(self, f, value):
        """Evaluate b at a rational, landing in the cyclotomic ground field."""
        value = _as_fraction(value)

        def ev(p):
            acc = self.ground.zero
            for c in reversed(p):
                acc = acc * value + c
            return acc

        den = ev(f.den)
        return ev(f.num) * den.inverse()

    def to_str(self, f):
        def fmt(p):
            if not p:
                return "0"
            parts = []
            for j in range(len(p) - 1, -1, -1):
                if p[j]:
                    mono = _fmt_power("b", j)
                    cs = self.ground.to_str(p[j])
                    parts.append("%s*%s" % (cs, mono) if mono else cs)
            return " + ".join(parts)

        num, den = fmt(f.num), fmt(f.den)
        return num if den == "1" else "(%s)/(%s)" % (num, den)


# ---------------------------------------------------------------------------
# truncated bigraded series
# ---------------------------------------------------------------------------


class TruncSeries:
    """Formal series in q, t, X truncated by total (q,t)-degree.

    Keys are (qexp, texp, xexp) with Fraction q/t exponents and integer X
    exponent; deg q = deg t = 1 and X has degree 0.  A term is kept iff
    qexp + texp < order.  The grading makes theta-type terms
    q^(j^2/4) t^(-j/2) go to +infinity, with per-term lower bound -1/4,
    so all products appearing in the identity verifiers stay finite.
    """

    __slots__ = ("order", "terms")

    def __init__(self, order, terms=None):
        self.order = _as_fraction(order)
        self.terms = {}
        if terms:
            for key, c in terms.items():
                self._add_term(key, c)

    def _add_term(self, key, c):
        qe, te, xe = key
        if qe + te >= self.order or not c:
            return
        key = (qe, te, xe)
        cur = self.terms.get(key)
        if cur is None:
            self.terms[key] = c
        else:
            cur += c
            if cur:
                self.terms[key] = cur
            else:
                del self.terms[key]

    @classmethod
    def constant(cls, order, c=Fraction(1)):
        s = cls(order)
        s._add_term((Fraction(0), Fraction(0), 0), _as_fraction(c))
        return s

    @classmethod
    def monomial(cls, order, qexp, texp=Fraction(0), xexp=0, coeff=Fraction(1)):
        s = cls(order)
        s._add_term((_as_fraction(qexp), _as_fraction(texp), int(xexp)), _as_fraction(coeff))
        return s

    def copy(self):
        s = TruncSeries(self.order)
        s.terms = dict(self.terms)
        return s

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncSeries.constant(self.order, other)
        s = self.copy()
        for key, c in other.terms.items():
            s._add_term(key, c)
        return s

    __radd__ = __add__

    def __neg__(self):
        s = TruncSeries(self.order)
        s.terms = {k: -c for k, c in self.terms.items()}
        return s

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncSeries.constant(self.order, other)
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _as_fraction(other)
            s = TruncSeries(self.order)
            if other:
                s.terms = {k: c * other for k, c in self.terms.items()}
            return s
        if len(other.terms) < len(self.terms):
            self, other = other, self
        s = TruncSeries(self.order)
        for (q1, t1, x1), c1 in self.terms.items():
            for (q2, t2, x2), c2 in other.terms.items():
                s._add_term((q1 + q2, t1 + t2, x1 + x2), c1 * c2)
        return s

    __rmul__ = __mul__

    def min_degree_term(self):
        """The unique term of minimal total degree, or raise if tied."""
        best = None
        for key, c in self.terms.items():
            d = key[0] + key[1]
            if best is None or d < best[0]:
                best = (d, key, c, False)
            elif d == best[0]:
                best = (d, key, c, True)
        if best is None:
            raise ZeroDivisionError("series is zero")
        if best[3]:
            raise ValueError("no unique minimal term; series not invertible here")
        return best[1], best[2]

    def inverse(self):
        (qe, te, xe), c = self.min_degree_term()
        lead_inv = TruncSeries.monomial(self.order, -qe, -te, -xe, Fraction(1) / c)
        v = self * lead_inv - 1  # all terms now have positive total degree
        span = self.order + abs(qe + te) + 1
        mindeg = min((k[0] + k[1] for k in v.terms), default=span)
        out = TruncSeries.constant(self.order)
        power = TruncSeries.constant(self.order)
        m = 1
        while v.terms and m * mindeg < span:
            power = power * v
            out = out + (power if m % 2 == 0 else -power)
            if not power.terms:
                break
            m += 1
        return out * lead_inv

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / _as_fraction(other))
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncSeries.constant(self.order, other)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        items = sorted(self.terms.items())[:8]
        body = ", ".join(
            "q^%s t^%s X^%s: %s" % (k[0], k[1], k[2], c) for k, c in items
        )
        more = "" if len(self.terms) <= 8 else ", ... (%d terms)" % len(self.terms)
        return "TruncSeries(%s; %s%s)" % (self.order, body, more)

    def constant_term_x(self):
        """Collect the X^0 layer."""
        s = TruncSeries(self.order)
        for (qe, te, xe), c in self.terms.items():
            if xe == 0:
                s._add_term((qe, te, 0), c)
        return s

    def coeff_x(self, n):
        """The X^n layer as an X-free series."""
        s = TruncSeries(self.order)
        for (qe, te, xe), c in self.terms.items():
            if xe == n:
                s._add_term((qe, te, 0), c)
        return s

    def x_support(self):
        return sorted({k[2] for k in self.terms})

    def subs_t_to_qt(self):
        """t -> q t (the parameter shift k -> k + 1); truncation is stable
        because the substitution can only raise total degree."""
        s = TruncSeries(self.order)
        for (qe, te, xe), c in self.terms.items():
            s._add_term((qe + te, te, xe), c)
        return s

    def subs_t_to_q_power(self, c):
        """t -> q^c for a positive rational c (specializing k to c)."""
        c = _as_fraction(c)
        if c <= 0:
            raise ValueError("need a positive exponent to keep truncation sound")
        s = TruncSeries(self.order)
        for (qe, te, xe), coeff in self.terms.items():
            if c >= 1:
                s._add_term((qe + c * te, Fraction(0), xe), coeff)
            else:
                # degree may drop by te*(1-c); only keep what is certain
                if qe + c * te < s.order - 0:
                    s._add_term((qe + c * te, Fraction(0), xe), coeff)
        return s

    def x_shift(self, n):
        """Multiply by X^n."""
        s = TruncSeries(self.order)
        for (qe, te, xe), c in self.terms.items():
            s._add_term((qe, te, xe + n), c)
        return s

    def x_invert(self):
        """X -> 1/X."""
        s = TruncSeries(self.order)
        for (qe, te, xe), c in self.terms.items():
            s._add_term((qe, te, -xe), c)
        return s


def geometric_factor_inverse(order, qexp, texp, xexp=0, coeff=Fraction(1)):
    """1/(1 - c q^a t^b X^g) expanded; requires a + b > 0."""
    qexp, texp = _as_fraction(qexp), _as_fraction(texp)
    d = qexp + texp
    if d <= 0:
        raise ValueError("factor exponent must have positive total degree")
    s = TruncSeries(order)
    m = 0
    c = Fraction(1)
    while m * d < order:
        s._add_term((m * qexp, m * texp, m * xexp), c)
        c *= _as_fraction(coeff)
        m += 1
    return s


def series_of_coeff(fld, f, order):
    """Expand a TwoParamField element as a bigraded TruncSeries (X-free).

    The denominator must have a unique minimal term in the grading
    (true for all products of (1 - t^i q^j) style factors).
    """
    num = _poly_to_series(fld, f.numer, order)
    den = _poly_to_series(fld, f.denom, order)
    return num * den.inverse()


def _poly_to_series(fld, poly, order):
    s = TruncSeries(order)
    for qe, te, c in fld.terms_qt(poly):
        s._add_term((qe, te, 0), c)
    return s
