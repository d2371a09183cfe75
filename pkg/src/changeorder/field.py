"""Prime field arithmetic.

Elements are kept as canonical residues in ``[0, p)``. The hot loops elsewhere
in the package work on plain ints together with a :class:`PrimeField`; the
:class:`FieldElement` wrapper is the checked, user-facing value type.
"""

from __future__ import annotations

from dataclasses import dataclass

# Deterministic Miller-Rabin witnesses, valid for every n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

MAX_MODULUS = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def inv_mod(a: int, p: int) -> int:
    """Inverse of ``a`` modulo ``p`` by the extended Euclidean algorithm."""
    a %= p
    if a == 0:
        raise ZeroDivisionError("inverse of zero in F_%d" % p)
    r0, r1 = p, a
    s0, s1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    # r0 == 1 because p is prime
    return s0 % p


class FieldMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class PrimeField:
    modulus: int

    def __post_init__(self):
        p = self.modulus
        if not (2 < p < MAX_MODULUS) or not is_prime(p):
            raise ValueError("modulus must be a prime with 2 < p < 2^31, got %r" % (p,))

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(value % self.modulus, self)

    def __repr__(self):
        return "F_%d" % self.modulus

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def inv(self, a: int) -> int:
        return inv_mod(a, self.modulus)


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.modulus:
            raise ValueError("unreduced residue %d for %r" % (self.value, self.field))

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError("%r vs %r" % (self.field, other.field))
            return other.value
        if isinstance(other, int):
            return other % self.field.modulus
        return NotImplemented

    def _make(self, v: int) -> "FieldElement":
        return FieldElement(v % self.field.modulus, self.field)

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._make(self.value + b)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._make(self.value - b)

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._make(b - self.value)

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._make(self.value * b)

    __rmul__ = __mul__

    def __neg__(self):
        return self._make(-self.value)

    def inv(self) -> "FieldElement":
        return FieldElement(inv_mod(self.value, self.field.modulus), self.field)

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._make(self.value * inv_mod(b, self.field.modulus))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.modulus))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return "%d mod %d" % (self.value, self.field.modulus)

    def __str__(self):
        return str(self.value)
