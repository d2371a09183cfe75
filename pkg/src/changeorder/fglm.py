"""Multiplication matrix of ``y`` and the Wiedemann-style sparse FGLM baseline.

Coordinate vectors are rows: row ``i`` of the matrix is the coordinate vector
of ``NF(y * b_i)`` on the basis, so ``coords(y*f) = coords(f) @ M``.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import List, Optional

from .field import PrimeField, inv_mod
from .groebner import GroebnerBasis, StaircaseProfile, check_stability
from .lexgb import ShapeLexBasis
from .modbasis import StructureError
from .mvpoly import MvPoly, normal_form
from .polymat import PolyMatrix
from .upoly import UPoly

log = logging.getLogger(__name__)


class InconsistencyError(RuntimeError):
    pass


@dataclass
class MultiplicationMatrix:
    basis: List[tuple]
    entries: List[List[int]]
    field: PrimeField

    @property
    def dim(self):
        return len(self.basis)

    def unit_successor(self, i) -> Optional[int]:
        """Index ``j`` if row ``i`` is the unit vector ``e_j``, else None."""
        row = self.entries[i]
        nz = [j for j, c in enumerate(row) if c]
        if len(nz) == 1 and row[nz[0]] == 1:
            return nz[0]
        return None

    def dense_rows(self):
        return [i for i in range(self.dim) if self.unit_successor(i) is None]

    def apply_right(self, w):
        """``M @ w`` for a column vector ``w``, touching unit rows in O(1)."""
        p = self.field.modulus
        out = []
        for i, row in enumerate(self.entries):
            j = self._succ[i]
            if j is not None:
                out.append(w[j])
            else:
                out.append(sum(a * b for a, b in zip(row, w)) % p)
        return out

    def __post_init__(self):
        self._succ = [self.unit_successor(i) for i in range(len(self.entries))]

    def to_text(self) -> str:
        lines = ["%d %d" % (self.dim, self.field.modulus)]
        lines.extend(" ".join(str(c) for c in row) for row in self.entries)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text, basis=None):
        lines = [ln.split() for ln in text.splitlines() if ln.strip()]
        d, p = int(lines[0][0]), int(lines[0][1])
        rows = [[int(x) for x in ln] for ln in lines[1:]]
        if len(rows) != d or any(len(r) != d for r in rows):
            raise ValueError("expected a %dx%d matrix" % (d, d))
        return cls(basis or [None] * d, rows, PrimeField(p))


def coordinates(f: MvPoly, index, dim) -> List[int]:
    v = [0] * dim
    for m, c in f.terms.items():
        j = index.get(m)
        if j is None:
            raise StructureError("monomial %r is outside the monomial basis" % (m,))
        v[j] = c
    return v


def _times_y(m):
    return m[:-1] + (m[-1] + 1,)


def build_mult_matrix(gb: GroebnerBasis, prof: StaircaseProfile) -> MultiplicationMatrix:
    """Read the matrix of multiplication by ``y`` directly off a stable reduced GB."""
    if not check_stability(gb).stable:
        raise StructureError("leading terms are not stable; use build_mult_matrix_nf")
    basis = prof.basis_monomials
    index = {b: i for i, b in enumerate(basis)}
    by_lm = {f.lm(gb.order): f for f in gb.polys}
    p = gb.field.modulus
    rows = []
    for b in basis:
        yb = _times_y(b)
        row = [0] * len(basis)
        if yb in index:
            row[index[yb]] = 1
        else:
            f = by_lm.get(yb)
            if f is None:
                raise StructureError("y*%r is not a leading monomial of the basis" % (b,))
            for m, c in f.terms.items():
                if m != yb:
                    j = index.get(m)
                    if j is None:
                        raise StructureError("GB tail monomial %r outside the staircase" % (m,))
                    row[j] = (-c) % p
        rows.append(row)
    return MultiplicationMatrix(list(basis), rows, gb.field)


def build_mult_matrix_nf(gb: GroebnerBasis, prof: StaircaseProfile) -> MultiplicationMatrix:
    """Generic construction through normal forms; no stability needed."""
    basis = prof.basis_monomials
    index = {b: i for i, b in enumerate(basis)}
    rows = []
    for b in basis:
        f = normal_form(MvPoly.monomial(_times_y(b), gb.field), gb.polys, gb.order)
        rows.append(coordinates(f, index, len(basis)))
    return MultiplicationMatrix(list(basis), rows, gb.field)


def compress_to_polymatrix(m: MultiplicationMatrix, prof: StaircaseProfile) -> PolyMatrix:
    """Replace each companion-like block of ``m`` by one polynomial of ``K[y]``."""
    field = m.field
    starts, pos = [], 0
    for e in prof.exponents:
        starts.append(pos)
        pos += e
    if pos != m.dim:
        raise ValueError("block sizes sum to %d, matrix has dimension %d" % (pos, m.dim))
    for i, (s, e) in enumerate(zip(starts, prof.exponents)):
        for r in range(s, s + e - 1):
            if m.unit_successor(r) != r + 1:
                raise ValueError("row %d breaks the y-run structure of block %d" % (r, i))
    t = len(prof.exponents)
    out = []
    for i in range(t):
        last = m.entries[starts[i] + prof.exponents[i] - 1]
        row = []
        for j in range(t):
            seg = last[starts[j]:starts[j] + prof.exponents[j]]
            poly = -UPoly(seg, field)
            if i == j:
                poly = poly + UPoly.monomial(prof.exponents[i], field)
            row.append(poly)
        out.append(row)
    return PolyMatrix(out, field, t)


def char_poly(m: MultiplicationMatrix) -> UPoly:
    """Monic ``det(y*I - M)`` via reduction to upper Hessenberg form."""
    field = m.field
    p = field.modulus
    n = m.dim
    a = [list(row) for row in m.entries]
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if a[i][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            a[piv], a[j + 1] = a[j + 1], a[piv]
            for row in a:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        inv = inv_mod(a[j + 1][j], p)
        for k in range(j + 2, n):
            u = a[k][j] * inv % p
            if not u:
                continue
            rk, rj = a[k], a[j + 1]
            for c in range(n):
                rk[c] = (rk[c] - u * rj[c]) % p
            for row in a:
                row[j + 1] = (row[j + 1] + u * row[k]) % p
    # p_k = (y - a_kk) p_{k-1} - sum_{i<k} a_ik * prod_{i<l<=k} a_{l,l-1} * p_{i-1}
    polys = [UPoly.one(field)]
    y = UPoly.monomial(1, field)
    for k in range(n):
        acc = (y - UPoly.constant(a[k][k], field)) * polys[k]
        prod = 1
        for i in range(k - 1, -1, -1):
            prod = prod * a[i + 1][i] % p
            if not prod:
                break
            c = a[i][k] * prod % p
            if c:
                acc = acc - polys[i].scale(c)
        polys.append(acc)
    return polys[n]


def berlekamp_massey(seq, p) -> List[int]:
    """Shortest connection polynomial ``[1, c_1, ..., c_L]`` of ``seq`` over ``F_p``."""
    c, b = [1], [1]
    length, shift, last_d = 0, 1, 1
    for k, s in enumerate(seq):
        d = s
        for i in range(1, length + 1):
            d = (d + c[i] * seq[k - i]) % p
        if d == 0:
            shift += 1
            continue
        coef = d * inv_mod(last_d, p) % p
        new = c + [0] * max(0, len(b) + shift - len(c))
        for i, x in enumerate(b):
            new[i + shift] = (new[i + shift] - coef * x) % p
        if 2 * length <= k:
            b, c = c, new
            length, last_d, shift = k + 1 - length, d, 1
        else:
            c = new
            shift += 1
    c = c + [0] * (length + 1 - len(c))
    return c[:length + 1]


def minimal_polynomial(seq, field: PrimeField) -> UPoly:
    c = berlekamp_massey(seq, field.modulus)
    return UPoly(list(reversed(c)), field)


def solve_dense(a, rhs_list, p):
    """Solve ``a @ x = rhs`` for each right-hand side by Gauss-Jordan elimination."""
    n = len(a)
    k = len(rhs_list)
    m = [list(row) + [r[i] for r in rhs_list] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise InconsistencyError("singular system at column %d" % col)
        m[col], m[piv] = m[piv], m[col]
        inv = inv_mod(m[col][col], p)
        pr = [x * inv % p for x in m[col]]
        m[col] = pr
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                row = m[r]
                for c in range(col, n + k):
                    row[c] = (row[c] - f * pr[c]) % p
    return [[m[i][n + j] for i in range(n)] for j in range(k)]


def sparse_fglm_shape(m: MultiplicationMatrix, prof: StaircaseProfile, seed=0,
                      gb: Optional[GroebnerBasis] = None) -> Optional[ShapeLexBasis]:
    """Shape LEX basis from projected Krylov sequences of ``M``, or None.

    ``s_k = L(y^k)`` and ``L(x_i y^k)`` for a random linear form ``L`` on the
    quotient; ``h`` is the minimal generator of ``s`` and each ``g_i`` solves
    the Hankel system ``sum_j s_{j+k} g_ij = L(x_i y^k)``.
    """
    field = m.field
    p = field.modulus
    dim = m.dim
    basis = m.basis
    nvars = len(basis[0])
    index = {b: i for i, b in enumerate(basis)}
    one = (0,) * nvars
    if one not in index:
        raise StructureError("1 is not in the monomial basis")
    x_coords = []
    for i in range(nvars - 1):
        xi = tuple(1 if k == i else 0 for k in range(nvars))
        if xi in index:
            v = [0] * dim
            v[index[xi]] = 1
        else:
            if gb is None:
                raise StructureError("x_%d is not in the basis and no GB was given" % (i + 1))
            v = coordinates(gb.normal_form(MvPoly.monomial(xi, field)), index, dim)
        x_coords.append(v)

    rng = random.Random(seed)
    for attempt in range(2):
        w = [rng.randrange(p) for _ in range(dim)]
        krylov = []  # M^k w
        for _ in range(2 * dim):
            krylov.append(w)
            w = m.apply_right(w)
        s = [z[index[one]] for z in krylov]
        h = minimal_polynomial(s, field)
        if h.degree == dim:
            break
        log.debug("sparse FGLM attempt %d: minimal polynomial degree %s < %d", attempt, h.degree, dim)
    else:
        return None

    hankel = [[s[j + k] for j in range(dim)] for k in range(dim)]
    rhs = [[sum(a * b for a, b in zip(v, krylov[k])) % p for k in range(dim)] for v in x_coords]
    if not rhs:
        return ShapeLexBasis(h, [])
    sols = solve_dense(hankel, rhs, p)
    return ShapeLexBasis(h, [UPoly(sol, field) for sol in sols])
