"""Dense univariate polynomials over a prime field."""

from __future__ import annotations

from dataclasses import dataclass

from . import _text
from .field import FieldElement, FieldMismatchError, PrimeField, inv_mod

# Degree of the zero polynomial.
DEG_ZERO = float("-inf")


@dataclass
class MulConfig:
    karatsuba: bool = False
    threshold: int = 32


mul_config = MulConfig()


def _trim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return c[:n] if n != len(c) else c


def _school(a, b, p):
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                out[i + j] += ai * bj
    return [x % p for x in out]


def _add_lists(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    return out


def _sub_lists(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return out


def _karatsuba(a, b, p, threshold):
    if len(a) < threshold or len(b) < threshold:
        return _school(a, b, p)
    m = max(len(a), len(b)) // 2
    a0, a1 = a[:m], a[m:]
    b0, b1 = b[:m], b[m:]
    z0 = _karatsuba(a0, b0, p, threshold)
    z2 = _karatsuba(a1, b1, p, threshold)
    z1 = _karatsuba(_add_lists(a0, a1, p), _add_lists(b0, b1, p), p, threshold)
    z1 = _sub_lists(_sub_lists(z1, z0, p), z2, p)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(z0):
        out[i] += x
    for i, x in enumerate(z1):
        out[i + m] += x
    for i, x in enumerate(z2):
        out[i + 2 * m] += x
    return [x % p for x in out]


class UPoly:
    """Immutable polynomial in ``K[y]``; ``coeffs[i]`` is the coefficient of ``y^i``."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field: PrimeField):
        p = field.modulus
        self.coeffs = tuple(_trim([int(c) % p for c in coeffs]))
        self.field = field

    @classmethod
    def _raw(cls, coeffs, field):
        # coeffs already reduced and trimmed
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.field = field
        return obj

    @classmethod
    def zero(cls, field):
        return cls._raw((), field)

    @classmethod
    def one(cls, field):
        return cls._raw((1,), field)

    @classmethod
    def constant(cls, c, field):
        return cls((c,), field)

    @classmethod
    def monomial(cls, degree, field, c=1):
        return cls([0] * degree + [c], field)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else DEG_ZERO

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (1,)

    def lc(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other):
        if not isinstance(other, UPoly):
            if isinstance(other, (int, FieldElement)):
                return UPoly.constant(int(other), self.field)
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatchError("%r vs %r" % (self.field, other.field))
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return UPoly._raw(_trim(_add_lists(self.coeffs, other.coeffs, self.field.modulus)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return UPoly._raw(_trim(_sub_lists(self.coeffs, other.coeffs, self.field.modulus)), self.field)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        p = self.field.modulus
        return UPoly._raw([(-c) % p for c in self.coeffs], self.field)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.field.modulus
        if mul_config.karatsuba:
            out = _karatsuba(list(self.coeffs), list(other.coeffs), p, mul_config.threshold)
        else:
            out = _school(self.coeffs, other.coeffs, p)
        # leading product of nonzero coefficients is nonzero mod a prime
        return UPoly._raw(_trim(out), self.field)

    __rmul__ = __mul__

    def scale(self, c: int) -> "UPoly":
        p = self.field.modulus
        c %= p
        if not c:
            return UPoly.zero(self.field)
        return UPoly._raw([x * c % p for x in self.coeffs], self.field)

    def shift(self, k: int) -> "UPoly":
        """Multiply by ``y^k``."""
        if not self.coeffs:
            return self
        return UPoly._raw((0,) * k + self.coeffs, self.field)

    def monic(self) -> "UPoly":
        if not self.coeffs:
            return self
        return self.scale(inv_mod(self.coeffs[-1], self.field.modulus))

    def divrem(self, g: "UPoly"):
        g = self._check(g)
        if g.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.field.modulus
        r = list(self.coeffs)
        dg = len(g.coeffs) - 1
        if len(r) - 1 < dg:
            return UPoly.zero(self.field), self
        inv_lc = inv_mod(g.coeffs[-1], p)
        gc = g.coeffs
        q = [0] * (len(r) - dg)
        for k in range(len(r) - 1, dg - 1, -1):
            c = r[k] % p
            if not c:
                continue
            c = c * inv_lc % p
            q[k - dg] = c
            off = k - dg
            for i in range(dg):
                r[off + i] -= c * gc[i]
            r[k] = 0
        r = [x % p for x in r[:dg]]
        return UPoly._raw(_trim(q), self.field), UPoly._raw(_trim(r), self.field)

    def __floordiv__(self, g):
        return self.divrem(g)[0]

    def __mod__(self, g):
        return self.divrem(g)[1]

    def __call__(self, x: int) -> int:
        p = self.field.modulus
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % p
        return acc

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == UPoly.constant(other, self.field).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.field.modulus))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return "UPoly(%s, %r)" % (self.to_text(), self.field)

    def __str__(self):
        return self.to_text()

    def to_text(self, var="y") -> str:
        terms = [_text.format_term(c, (i,), (var,)) for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"

    @classmethod
    def from_text(cls, text: str, field: PrimeField, var="y") -> "UPoly":
        acc = {}
        for c, (e,) in _text.parse_terms(text, (var,)):
            acc[e] = acc.get(e, 0) + c
        if not acc:
            return cls.zero(field)
        out = [0] * (max(acc) + 1)
        for e, c in acc.items():
            out[e] = c
        return cls(out, field)


def gcd_ext(f: UPoly, g: UPoly):
    """Return ``(d, u, v)`` with ``u*f + v*g == d`` and ``d`` monic."""
    if f.field != g.field:
        raise FieldMismatchError("%r vs %r" % (f.field, g.field))
    field = f.field
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials")
    r0, r1 = f, g
    s0, s1 = UPoly.one(field), UPoly.zero(field)
    t0, t1 = UPoly.zero(field), UPoly.one(field)
    while not r1.is_zero():
        q, r = r0.divrem(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    c = inv_mod(r0.lc(), field.modulus)
    return r0.scale(c), s0.scale(c), t0.scale(c)
