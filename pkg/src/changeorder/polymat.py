"""Matrices over K[y]: products, determinants, Hermite forms and left kernels.

Hermite normal forms here are *lower* triangular, with monic diagonal entries
that strictly dominate the degree of every other entry in their column.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .field import FieldMismatchError, PrimeField, inv_mod
from .upoly import UPoly


class SingularMatrixError(ValueError):
    pass


class RankDeficientError(ValueError):
    pass


class PolyMatrix:
    __slots__ = ("rows", "cols", "entries", "field")

    def __init__(self, entries, field: PrimeField, cols: Optional[int] = None):
        self.entries = tuple(tuple(row) for row in entries)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else (cols or 0)
        self.field = field
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")
            for x in row:
                if x.field != field:
                    raise FieldMismatchError("entry over %r in matrix over %r" % (x.field, field))

    @classmethod
    def identity(cls, n, field):
        one, zero = UPoly.one(field), UPoly.zero(field)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], field, n)

    @classmethod
    def zeros(cls, r, c, field):
        zero = UPoly.zero(field)
        return cls([[zero] * c for _ in range(r)], field, c)

    @classmethod
    def diag(cls, polys, field):
        zero = UPoly.zero(field)
        n = len(polys)
        return cls([[polys[i] if i == j else zero for j in range(n)] for i in range(n)], field, n)

    @classmethod
    def from_ints(cls, rows, field):
        """Build from nested lists of coefficient lists (low degree first)."""
        return cls([[UPoly(c, field) for c in row] for row in rows], field)

    @property
    def shape(self):
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "PolyMatrix(%dx%d over %r)" % (self.rows, self.cols, self.field)

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)

    def column_degrees(self):
        return [max(self.entries[i][j].degree for i in range(self.rows)) for j in range(self.cols)]

    def row_degrees(self):
        return [max(x.degree for x in row) for row in self.entries]

    def transpose(self):
        return PolyMatrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
                          self.field, self.rows)

    def submatrix(self, rows, cols):
        rows, cols = list(rows), list(cols)
        return PolyMatrix([[self.entries[i][j] for j in cols] for i in rows], self.field, len(cols))

    def permute_columns(self, perm):
        """Column ``k`` of the result is column ``perm[k]`` of ``self``."""
        return self.submatrix(range(self.rows), perm)

    def is_zero(self):
        return all(x.is_zero() for row in self.entries for x in row)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def to_text(self) -> str:
        lines = ["%d %d %d" % (self.rows, self.cols, self.field.modulus)]
        lines.extend(x.to_text() for row in self.entries for x in row)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "PolyMatrix":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        r, c, p = (int(tok) for tok in lines[0].split())
        field = PrimeField(p)
        body = lines[1:]
        if len(body) != r * c:
            raise ValueError("expected %d entries, found %d" % (r * c, len(body)))
        polys = [UPoly.from_text(s, field) for s in body]
        return cls([polys[i * c:(i + 1) * c] for i in range(r)], field, c)


def mat_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    if a.cols != b.rows:
        raise ValueError("dimension mismatch: %dx%d times %dx%d" % (a.rows, a.cols, b.rows, b.cols))
    if a.field != b.field:
        raise FieldMismatchError("%r vs %r" % (a.field, b.field))
    zero = UPoly.zero(a.field)
    out = []
    for i in range(a.rows):
        arow = a.entries[i]
        row = []
        for j in range(b.cols):
            acc = zero
            for k in range(a.cols):
                x = arow[k]
                if x:
                    y = b.entries[k][j]
                    if y:
                        acc = acc + x * y
            row.append(acc)
        out.append(row)
    return PolyMatrix(out, a.field, b.cols)


def determinant(a: PolyMatrix) -> UPoly:
    """Fraction-free (Bareiss) elimination; every division is exact in K[y]."""
    if a.rows != a.cols:
        raise ValueError("determinant of a non-square %dx%d matrix" % a.shape)
    n = a.rows
    field = a.field
    if n == 0:
        return UPoly.one(field)
    m = [list(row) for row in a.entries]
    sign = 1
    prev = UPoly.one(field)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return UPoly.zero(field)
        pk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                num = pk * m[i][j] - mik * m[k][j]
                q, r = num.divrem(prev)
                assert r.is_zero(), "inexact Bareiss division"
                m[i][j] = q
            m[i][k] = UPoly.zero(field)
        prev = pk
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


# -- elimination engine shared by the Hermite form and the kernel basis ------

def _row_axpy(dst, src, q, upto):
    """dst[:upto] -= q * src[:upto], in place."""
    for l in range(upto):
        s = src[l]
        if s:
            dst[l] = dst[l] - q * s


def _eliminate_column(rows, trans, active, j):
    """Zero column ``j`` on all ``active`` rows but one, by Euclidean division.

    Columns to the right of ``j`` are assumed already zero on the active rows.
    The pivot is the row of least degree in column ``j``, lowest index first.
    Returns the pivot row index, or None if the column is zero.
    """
    while True:
        nz = [i for i in active if rows[i][j]]
        if not nz:
            return None
        piv = min(nz, key=lambda i: (rows[i][j].degree, i))
        if len(nz) == 1:
            return piv
        pv = rows[piv][j]
        for k in nz:
            if k == piv:
                continue
            q = rows[k][j] // pv
            _row_axpy(rows[k], rows[piv], q, j + 1)
            if trans is not None:
                _row_axpy(trans[k], trans[piv], q, len(trans[k]))


@dataclass(frozen=True)
class HermiteResult:
    h: PolyMatrix
    u: Optional[PolyMatrix]
    rank: int


def hermite_normal_form(a: PolyMatrix, transform: bool = True) -> HermiteResult:
    """Lower-triangular Hermite normal form of a square nonsingular matrix.

    With ``transform`` the unimodular ``u`` with ``u @ a == h`` is tracked too.
    """
    if a.rows != a.cols:
        raise ValueError("Hermite form is only supported for square matrices, got %dx%d" % a.shape)
    t = a.rows
    field = a.field
    p = field.modulus
    rows = [list(r) for r in a.entries]
    trans = [list(r) for r in PolyMatrix.identity(t, field).entries] if transform else None

    active = list(range(t))
    pivots = [0] * t
    for j in reversed(range(t)):
        piv = _eliminate_column(rows, trans, active, j)
        if piv is None:
            raise SingularMatrixError("matrix is singular (column %d vanishes)" % j)
        pivots[j] = piv
        active.remove(piv)

    rows = [rows[pivots[j]] for j in range(t)]
    if trans is not None:
        trans = [trans[pivots[j]] for j in range(t)]

    for j in range(t):
        c = inv_mod(rows[j][j].lc(), p)
        if c != 1:
            rows[j] = [x.scale(c) for x in rows[j]]
            if trans is not None:
                trans[j] = [x.scale(c) for x in trans[j]]

    # Reducing column j touches only columns < j, so sweep right to left.
    for j in reversed(range(t - 1)):
        d = rows[j][j]
        for i in range(j + 1, t):
            x = rows[i][j]
            if x.degree >= d.degree:
                q = x // d
                _row_axpy(rows[i], rows[j], q, j + 1)
                if trans is not None:
                    _row_axpy(trans[i], trans[j], q, t)

    h = PolyMatrix(rows, field, t)
    u = PolyMatrix(trans, field, t) if trans is not None else None
    return HermiteResult(h, u, t)


def is_hermite_form(h: PolyMatrix) -> bool:
    if h.rows != h.cols:
        return False
    for i in range(h.rows):
        for j in range(h.cols):
            if j > i and not h[i, j].is_zero():
                return False
    for j in range(h.cols):
        d = h[j, j]
        if d.is_zero() or d.lc() != 1:
            return False
        for i in range(h.rows):
            if i != j and h[i, j].degree >= d.degree:
                return False
    return True


def left_kernel_basis(a: PolyMatrix) -> PolyMatrix:
    """A basis of the left kernel ``{v : v @ a == 0}`` of a full column rank matrix.

    The rows of the returned ``(r-c) x r`` matrix generate the whole kernel
    module: they are the rows of a unimodular transform that annihilate ``a``.
    """
    r, c = a.shape
    if r < c:
        raise RankDeficientError("a %dx%d matrix cannot have full column rank" % (r, c))
    field = a.field
    rows = [list(row) for row in a.entries]
    trans = [list(row) for row in PolyMatrix.identity(r, field).entries]
    active = list(range(r))
    for j in reversed(range(c)):
        piv = _eliminate_column(rows, trans, active, j)
        if piv is None:
            raise RankDeficientError("column %d is dependent on the columns to its right" % j)
        active.remove(piv)
    return PolyMatrix([trans[i] for i in active], field, r)
