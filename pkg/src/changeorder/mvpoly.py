"""Monomials, the DRL and LEX orders, and multivariate polynomials.

Monomials are exponent tuples of a fixed length ``n``. Slot ``k < n - 1`` is
the exponent of ``x_{k+1}`` and the last slot is the exponent of ``y``, which
is the smallest variable for both orders.
"""

from __future__ import annotations

import enum
from operator import add

from . import _packed, _text
from .field import FieldElement, FieldMismatchError, PrimeField, inv_mod


class MonomialOrder(enum.Enum):
    DRL = "drl"
    LEX = "lex"

    def key(self, m):
        """Sort key: ``a > b`` in the order iff ``key(a) > key(b)``."""
        if self is MonomialOrder.LEX:
            return m
        return (sum(m),) + tuple(-e for e in reversed(m))

    def neg_key(self, m):
        # min-heap key of a max-first traversal
        if self is MonomialOrder.LEX:
            return tuple(-e for e in m)
        return (-sum(m),) + tuple(reversed(m))


DRL = MonomialOrder.DRL
LEX = MonomialOrder.LEX


def compare(order: MonomialOrder, a, b) -> int:
    if len(a) != len(b):
        raise ValueError("monomials of different lengths: %r, %r" % (a, b))
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


def mono_mul(a, b):
    return tuple(map(add, a, b))


def mono_div(a, b):
    """``a / b``; caller guarantees ``b | a``."""
    return tuple(x - y for x, y in zip(a, b))


def divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def one_monomial(n):
    return (0,) * n


def variable(n, k):
    e = [0] * n
    e[k] = 1
    return tuple(e)


class MvPoly:
    """Polynomial as a map from exponent tuples to nonzero residues."""

    __slots__ = ("terms", "field", "nvars")

    def __init__(self, terms, field: PrimeField, nvars: int):
        p = field.modulus
        clean = {}
        for m, c in dict(terms).items():
            if len(m) != nvars:
                raise ValueError("monomial %r does not have %d exponents" % (m, nvars))
            c = int(c) % p
            if c:
                clean[tuple(m)] = c
        self.terms = clean
        self.field = field
        self.nvars = nvars

    @classmethod
    def _raw(cls, terms, field, nvars):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.field = field
        obj.nvars = nvars
        return obj

    @classmethod
    def zero(cls, field, nvars):
        return cls._raw({}, field, nvars)

    @classmethod
    def monomial(cls, m, field, c=1):
        return cls({tuple(m): c}, field, len(m))

    def is_zero(self):
        return not self.terms

    def support(self):
        return set(self.terms)

    def coeff(self, m) -> int:
        return self.terms.get(tuple(m), 0)

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def _check(self, other):
        if not isinstance(other, MvPoly):
            return NotImplemented
        if other.field != self.field or other.nvars != self.nvars:
            raise FieldMismatchError("incompatible polynomial rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self._combine(other, 1)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self._combine(other, -1)

    def _combine(self, other, sign):
        p = self.field.modulus
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) + sign * c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return MvPoly._raw(out, self.field, self.nvars)

    def __neg__(self):
        p = self.field.modulus
        return MvPoly._raw({m: (-c) % p for m, c in self.terms.items()}, self.field, self.nvars)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(int(other))
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.field.modulus
        out = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return MvPoly({m: c % p for m, c in out.items()}, self.field, self.nvars)

    __rmul__ = __mul__

    def scale(self, c):
        p = self.field.modulus
        c %= p
        if not c:
            return MvPoly.zero(self.field, self.nvars)
        return MvPoly._raw({m: v * c % p for m, v in self.terms.items()}, self.field, self.nvars)

    def mul_term(self, mono, c=1):
        p = self.field.modulus
        c %= p
        if not c:
            return MvPoly.zero(self.field, self.nvars)
        return MvPoly._raw({mono_mul(m, mono): v * c % p for m, v in self.terms.items()},
                           self.field, self.nvars)

    def leading_term(self, order: MonomialOrder):
        return leading_term(order, self)

    def lm(self, order):
        return leading_term(order, self)[0]

    def monic(self, order):
        m, c = leading_term(order, self)
        return self.scale(inv_mod(c, self.field.modulus))

    def sorted_terms(self, order):
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    def __eq__(self, other):
        if not isinstance(other, MvPoly):
            return NotImplemented
        return self.field == other.field and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        names = default_var_names(self.nvars)
        return "MvPoly(%s)" % self.to_text(names, DRL)

    def to_text(self, var_names, order: MonomialOrder) -> str:
        if not self.terms:
            return "0"
        return " + ".join(_text.format_term(c, m, var_names) for m, c in self.sorted_terms(order))

    @classmethod
    def from_text(cls, text, var_names, field: PrimeField) -> "MvPoly":
        acc = {}
        for c, m in _text.parse_terms(text, var_names):
            acc[m] = acc.get(m, 0) + c
        return cls(acc, field, len(var_names))


def default_var_names(n):
    return ["x%d" % (k + 1) for k in range(n - 1)] + ["y"]


def leading_term(order: MonomialOrder, f: MvPoly):
    if not f.terms:
        raise ValueError("the zero polynomial has no leading term")
    key = order.key
    m = max(f.terms, key=key)
    return m, f.terms[m]


def normal_form(f: MvPoly, g_list, order: MonomialOrder) -> MvPoly:
    """Fully reduce ``f`` by ``g_list``.

    The largest reducible monomial is always eliminated first, using the
    earliest element of ``g_list`` whose leading monomial divides it.
    """
    if not g_list or f.is_zero():
        return f
    p = f.field.modulus
    pk = _packed.Packer(f.nvars, order)
    divisors = [_packed.make_divisor(_packed.pack_terms(g.terms, pk), pk, p)
                for g in g_list if not g.is_zero()]
    rem = _packed.reduce(_packed.pack_terms(f.terms, pk), divisors, p, pk)
    return MvPoly._raw(_packed.unpack_terms(rem, pk), f.field, f.nvars)
