"""From the Hermite form of the module basis to the reduced LEX Gröbner basis."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional

from .groebner import GroebnerBasis
from .modbasis import ModuleBasis, StructureError, expand_vector, module_vector
from .mvpoly import LEX, MvPoly, divides, leading_term, normal_form
from .polymat import PolyMatrix, hermite_normal_form, left_kernel_basis, mat_mul
from .upoly import UPoly

log = logging.getLogger(__name__)


@dataclass
class ShapeLexBasis:
    h: UPoly
    g: List[UPoly]  # g[i] parametrizes x_{i+1}

    def polys(self, nvars) -> List[MvPoly]:
        field = self.h.field
        y = lambda e: (0,) * (nvars - 1) + (e,)
        out = [MvPoly({y(e): c for e, c in enumerate(self.h.coeffs)}, field, nvars)]
        for i, gi in enumerate(self.g):
            terms = {y(e): -c for e, c in enumerate(gi.coeffs)}
            xi = tuple(1 if k == i else 0 for k in range(nvars))
            terms[xi] = 1
            out.append(MvPoly(terms, field, nvars))
        return out

    def to_groebner(self, nvars) -> GroebnerBasis:
        return GroebnerBasis.from_polys(self.polys(nvars), LEX, self.h.field, nvars)


@dataclass
class LexOutput:
    lex_gb: GroebnerBasis
    shape: Optional[ShapeLexBasis]
    used_kernel_shortcut: bool = False
    certified: bool = True  # False when G_lex inside R_C was assumed, not known


def _unit(n, i):
    return tuple(1 if k == i else 0 for k in range(n))


def row_polys(h_mat: PolyMatrix, c_monomials) -> List[MvPoly]:
    return [expand_vector(row, c_monomials, h_mat.field) for row in h_mat.entries]


def minimal_filter(candidates) -> GroebnerBasis:
    """Keep the candidates whose LEX leading monomials minimally generate, then inter-reduce."""
    cands = [f for f in candidates if not f.is_zero()]
    lms = [f.lm(LEX) for f in cands]
    if len(set(lms)) != len(lms):
        raise ValueError("candidates have repeated LEX leading monomials")
    kept = [f for f, m in zip(cands, lms)
            if not any(divides(o, m) for o in lms if o != m)]
    out = []
    for i, f in enumerate(kept):
        m, c = leading_term(LEX, f)
        tail = f - MvPoly.monomial(m, f.field, c)
        tail = normal_form(tail, kept[:i] + kept[i + 1:], LEX)
        out.append(MvPoly.monomial(m, f.field, c) + tail)
    return GroebnerBasis.from_polys(out, LEX)


def shape_from_hermite(h_mat: PolyMatrix, c_monomials, gb: Optional[GroebnerBasis] = None
                       ) -> Optional[ShapeLexBasis]:
    """Shape parametrization whenever the Hermite form has diagonal ``(h, 1, ..., 1)``.

    Row ``j > 0`` then reads ``mu_j - b_j(y)`` with ``b_j`` the LEX normal form
    of ``mu_j``. A variable missing from ``C`` is a DRL leading monomial; its
    normal form with respect to ``gb`` is ``sum a_k(y) mu_k`` and so its
    parametrization is ``sum a_k * b_k mod h``.
    """
    n = len(c_monomials[0])
    t = h_mat.rows
    field = h_mat.field
    if c_monomials[0] != (0,) * n:
        return None
    h = h_mat[0, 0]
    if h.degree < 1:
        return None
    for i in range(1, t):
        if not h_mat[i, i].is_one():
            return None
        if any(not h_mat[i, j].is_zero() for j in range(1, t) if j != i):
            return None
    b = [UPoly.one(field)] + [-h_mat[i, 0] for i in range(1, t)]
    index = {m: i for i, m in enumerate(c_monomials)}
    g = []
    for i in range(n - 1):
        xi = _unit(n, i)
        if xi in index:
            g.append(b[index[xi]])
            continue
        if gb is None:
            return None
        vec = module_vector(gb.normal_form(MvPoly.monomial(xi, field)), c_monomials)
        acc = UPoly.zero(field)
        for a, bk in zip(vec, b):
            if not a.is_zero():
                acc = acc + a * bk
        g.append(acc % h)
    return ShapeLexBasis(h, g)


def detect_shape(h_mat: PolyMatrix, c_monomials) -> Optional[ShapeLexBasis]:
    """Shape parametrization if the Hermite form has diagonal ``(h, 1, ..., 1)``
    and ``C`` holds 1 and every ``x_i``; None otherwise."""
    return shape_from_hermite(h_mat, c_monomials)


def read_off_lex(h_mat: PolyMatrix, c_monomials, lt_lex=None,
                 gb: Optional[GroebnerBasis] = None) -> LexOutput:
    """Read the reduced LEX basis off the rows of a Hermite form over LEX-increasing ``C``.

    With ``lt_lex`` (the known LEX leading monomials) the matching rows are
    taken as they are; otherwise every row is expanded and minimally filtered.
    Passing the DRL basis ``gb`` lets shape position be recognised even when
    some ``x_i`` is missing from ``C``; the LEX basis is then built from the
    parametrization, since no row carries those variables.
    """
    n = len(c_monomials[0])
    shape = shape_from_hermite(h_mat, c_monomials, gb)
    if shape is not None and any(_unit(n, i) not in c_monomials for i in range(n - 1)):
        return LexOutput(shape.to_groebner(n), shape, certified=True)
    polys = row_polys(h_mat, c_monomials)
    if lt_lex is not None:
        wanted = set(lt_lex)
        chosen = [f for f in polys if f.lm(LEX) in wanted]
        if len(chosen) != len(wanted):
            raise StructureError("Hermite rows do not cover the given LEX leading monomials")
        lex = GroebnerBasis.from_polys(chosen, LEX)
    else:
        lex = minimal_filter(polys)
    return LexOutput(lex, shape, certified=shape is not None)


def shortcut_permutation(c_monomials):
    """Column order putting ``(1, x_{n-1}, ..., x_1)`` first, the rest in ``C`` order."""
    n = len(c_monomials[0])
    index = {m: i for i, m in enumerate(c_monomials)}
    lead = [(0,) * n] + [_unit(n, i) for i in reversed(range(n - 1))]
    missing = [m for m in lead if m not in index]
    if missing:
        raise StructureError("C lacks %r; the kernel shortcut needs 1 and every x_i" % (missing,))
    head = [index[m] for m in lead]
    return head + [j for j in range(len(c_monomials)) if j not in head]


def kernel_shortcut(mb: ModuleBasis, n: Optional[int] = None) -> PolyMatrix:
    """Leading ``n x n`` block of the Hermite form of the column-permuted basis.

    Computed as the Hermite form of ``K @ P_left`` with ``K`` a left kernel
    basis of the right ``t x (t - n)`` block.
    """
    n = n or mb.nvars
    perm = shortcut_permutation(mb.c_monomials)
    p = mb.matrix.permute_columns(perm)
    t = p.rows
    if t == n:
        return hermite_normal_form(p, transform=False).h
    right = p.submatrix(range(t), range(n, t))
    left = p.submatrix(range(t), range(n))
    k = left_kernel_basis(right)
    q = mat_mul(k, left)
    return hermite_normal_form(q, transform=False).h


def shortcut_c_monomials(c_monomials):
    perm = shortcut_permutation(c_monomials)
    n = len(c_monomials[0])
    return [c_monomials[j] for j in perm[:n]]
