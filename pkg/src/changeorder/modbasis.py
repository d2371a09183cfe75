"""A K[y]-basis of the module of ideal elements supported on ``y^e * C``.

``C`` is the y-free part of the monomial basis, LEX-increasing. Row ``i`` of
the basis matrix holds the coordinates, over ``C``, of one module generator,
and has the degree profile ``diag(y^e_1, ..., y^e_t) + R`` with column ``j``
of ``R`` of degree below ``e_j``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Optional

from . import _text
from .groebner import GroebnerBasis, StaircaseProfile, check_stability
from .mvpoly import MvPoly, normal_form
from .polymat import PolyMatrix, determinant
from .upoly import UPoly


class NotInModule(ValueError):
    def __init__(self, monomial):
        super().__init__("monomial %r is not of the form y^e * mu with mu in C" % (monomial,))
        self.monomial = monomial


class StructureError(ValueError):
    pass


class Provenance(enum.Enum):
    FROM_STABLE_GB = "stable-gb"
    FROM_BORDER_NF = "border-nf"


@dataclass
class ModuleBasis:
    c_monomials: List[tuple]
    matrix: PolyMatrix
    provenance: Provenance
    exponents: Optional[List[int]] = None

    @property
    def t(self):
        return len(self.c_monomials)

    @property
    def nvars(self):
        return len(self.c_monomials[0])

    def shape_certified(self) -> bool:
        """True when ``1`` and every ``x_i`` belong to ``C``."""
        n = self.nvars
        need = [(0,) * n] + [tuple(1 if k == i else 0 for k in range(n)) for i in range(n - 1)]
        return all(m in self.c_monomials for m in need)

    def row_polynomial(self, i) -> MvPoly:
        return expand_vector(self.matrix.entries[i], self.c_monomials, self.matrix.field)

    def to_text(self, var_names) -> str:
        cs = ",".join(_text.format_term(1, m, var_names) for m in self.c_monomials)
        return "C: %s\n%s" % (cs, self.matrix.to_text())


def module_vector(f: MvPoly, c_monomials) -> List[UPoly]:
    """Coordinates ``(f_1, ..., f_t)`` of ``f = sum f_j * mu_j``."""
    index = {mu: j for j, mu in enumerate(c_monomials)}
    coeffs = [dict() for _ in c_monomials]
    for m, c in f.terms.items():
        j = index.get(m[:-1] + (0,))
        if j is None:
            raise NotInModule(m)
        coeffs[j][m[-1]] = c
    out = []
    for d in coeffs:
        top = max(d, default=-1)
        out.append(UPoly([d.get(k, 0) for k in range(top + 1)], f.field))
    return out


def expand_vector(vec, c_monomials, field) -> MvPoly:
    terms = {}
    for poly, mu in zip(vec, c_monomials):
        for e, c in enumerate(poly.coeffs):
            if c:
                terms[mu[:-1] + (e,)] = c
    return MvPoly(terms, field, len(c_monomials[0]))


def _border_monomial(mu, e):
    return mu[:-1] + (mu[-1] + e,)


def basis_from_stable_gb(gb: GroebnerBasis, prof: StaircaseProfile) -> ModuleBasis:
    """Read the basis off the GB elements whose leading monomial is divisible by ``y``."""
    report = check_stability(gb)
    if not report.stable:
        mu, i = report.witness
        raise StructureError("stability fails at leading monomial %r, variable %d" % (mu, i + 1))
    chosen = [f for f in gb.polys if f.lm(gb.order)[-1] > 0]
    t = prof.t
    if len(chosen) != t:
        raise StructureError("%d GB elements have a y-divisible leading term, expected %d" % (len(chosen), t))
    by_lm = {f.lm(gb.order): f for f in chosen}
    rows = []
    for mu, e in zip(prof.c_monomials, prof.exponents):
        f = by_lm.get(_border_monomial(mu, e))
        if f is None:
            raise StructureError("no GB element with leading monomial y^%d * %r" % (e, mu))
        try:
            rows.append(module_vector(f, prof.c_monomials))
        except NotInModule as exc:
            raise StructureError(str(exc)) from exc
    return ModuleBasis(list(prof.c_monomials), PolyMatrix(rows, gb.field, t),
                       Provenance.FROM_STABLE_GB, list(prof.exponents))


def basis_from_border(gb: GroebnerBasis, prof: StaircaseProfile) -> ModuleBasis:
    """Rows ``y^e_i * mu_i - NF(y^e_i * mu_i)``; valid for any zero-dimensional ideal."""
    rows = []
    for mu, e in zip(prof.c_monomials, prof.exponents):
        b = MvPoly.monomial(_border_monomial(mu, e), gb.field)
        f = b - normal_form(b, gb.polys, gb.order)
        rows.append(module_vector(f, prof.c_monomials))
    return ModuleBasis(list(prof.c_monomials), PolyMatrix(rows, gb.field, prof.t),
                       Provenance.FROM_BORDER_NF, list(prof.exponents))


@dataclass(frozen=True)
class RankCertificate:
    full_rank: bool
    degree: Optional[int] = None  # deg det when full rank


def rank_certificate(mb) -> RankCertificate:
    m = mb.matrix if isinstance(mb, ModuleBasis) else mb
    if m.rows != m.cols:
        return RankCertificate(False)
    det = determinant(m)
    if det.is_zero():
        return RankCertificate(False)
    return RankCertificate(True, det.degree)
