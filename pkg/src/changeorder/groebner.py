"""Reduced Gröbner bases, staircases and the structural checks built on them."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import _packed
from .field import PrimeField, inv_mod
from .mvpoly import (
    LEX,
    MonomialOrder,
    MvPoly,
    divides,
    leading_term,
    mono_div,
    mono_lcm,
    normal_form,
    one_monomial,
)
from .upoly import UPoly

log = logging.getLogger(__name__)


class NotZeroDimensionalError(ValueError):
    pass


@dataclass
class GroebnerBasis:
    order: MonomialOrder
    polys: List[MvPoly]
    field: PrimeField
    nvars: int

    @classmethod
    def from_polys(cls, polys, order, field=None, nvars=None):
        """Normalize: drop zeros, make monic, sort by increasing leading monomial."""
        polys = [f for f in polys if not f.is_zero()]
        if polys:
            field, nvars = polys[0].field, polys[0].nvars
        polys = [f.monic(order) for f in polys]
        polys.sort(key=lambda f: order.key(f.lm(order)))
        return cls(order, polys, field, nvars)

    def leading_monomials(self):
        return [f.lm(self.order) for f in self.polys]

    def normal_form(self, f: MvPoly) -> MvPoly:
        return normal_form(f, self.polys, self.order)

    def is_reduced(self) -> bool:
        lms = self.leading_monomials()
        for i, f in enumerate(self.polys):
            if leading_term(self.order, f)[1] != 1:
                return False
            for m in f.terms:
                for j, l in enumerate(lms):
                    if divides(l, m) and not (j == i and m == lms[i]):
                        return False
        return True

    def is_groebner(self) -> bool:
        """Buchberger's criterion: every S-polynomial reduces to zero."""
        for i in range(len(self.polys)):
            for j in range(i + 1, len(self.polys)):
                s = s_polynomial(self.polys[i], self.polys[j], self.order)
                if not self.normal_form(s).is_zero():
                    return False
        return True

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.order == other.order and self.polys == other.polys


def s_polynomial(f: MvPoly, g: MvPoly, order) -> MvPoly:
    mf, cf = leading_term(order, f)
    mg, cg = leading_term(order, g)
    l = mono_lcm(mf, mg)
    p = f.field.modulus
    return f.mul_term(mono_div(l, mf), inv_mod(cf, p)) - g.mul_term(mono_div(l, mg), inv_mod(cg, p))


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def buchberger(gens, order: MonomialOrder, strategy: str = "normal") -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    Pairs are pruned with the Gebauer-Möller installation of Buchberger's
    product and chain criteria. ``strategy`` is ``"normal"`` (smallest lcm
    first) or ``"sugar"`` (smallest sugar degree, then smallest lcm).
    """
    gens = [f for f in gens if not f.is_zero()]
    if not gens:
        raise ValueError("buchberger needs at least one nonzero generator")
    field, nvars = gens[0].field, gens[0].nvars
    p = field.modulus
    key = order.key
    pk = _packed.Packer(nvars, order)

    polys = []  # packed, monic
    divs = []  # (packed lm, 1, packed tail) per element of polys
    lms = []
    sugar = []
    basis: List[int] = []  # indices into polys currently in the basis
    pairs = {}  # (i, j) -> lcm

    def update(h):
        lm_h = lms[h]
        cand = [(g, mono_lcm(lm_h, lms[g])) for g in basis]
        kept = []
        for k, (g, l) in enumerate(cand):
            if _coprime(lm_h, lms[g]):
                kept.append((g, l))
                continue
            others = [l2 for _, l2 in cand[k + 1:]] + [l2 for _, l2 in kept]
            if not any(divides(l2, l) for l2 in others):
                kept.append((g, l))
        new_pairs = {(g, h): l for g, l in kept if not _coprime(lm_h, lms[g])}
        for (a, b), l in list(pairs.items()):
            if divides(lm_h, l) and mono_lcm(lms[a], lm_h) != l and mono_lcm(lms[b], lm_h) != l:
                del pairs[(a, b)]
        pairs.update(new_pairs)
        basis[:] = [g for g in basis if not divides(lm_h, lms[g])] + [h]

    def add(work, sdeg):
        lm, inv_lc, _ = _packed.make_divisor(work, pk, p)
        if inv_lc != 1:
            work = {v: c * inv_lc % p for v, c in work.items()}
        polys.append(work)
        divs.append(_packed.make_divisor(work, pk, p))
        lms.append(pk.unpack(lm))
        sugar.append(sdeg)
        update(len(polys) - 1)

    for f in gens:
        add(_packed.pack_terms(f.terms, pk), f.total_degree())

    def pair_key(item):
        (a, b), l = item
        if strategy == "sugar":
            s = max(sugar[a] - sum(lms[a]), sugar[b] - sum(lms[b])) + sum(l)
            return (s, key(l), a, b)
        return (key(l), a, b)

    reductions = 0
    while pairs:
        (a, b), l = min(pairs.items(), key=pair_key)
        del pairs[(a, b)]
        lp = pk.pack(l)
        qa, qb = lp - divs[a][0], lp - divs[b][0]
        s = {v + qa: c for v, c in polys[a].items()}
        for v, c in polys[b].items():
            v += qb
            x = (s.get(v, 0) - c) % p
            if x:
                s[v] = x
            else:
                s.pop(v, None)
        r = _packed.reduce(s, [divs[g] for g in basis], p, pk)
        reductions += 1
        if r:
            sdeg = max(sugar[a] - sum(lms[a]), sugar[b] - sum(lms[b])) + sum(l)
            add(r, sdeg)
    log.debug("buchberger(%s): %d reductions, %d basis elements", order.value, reductions, len(basis))

    # An input generator can enter with a leading monomial that is a multiple
    # of one already present, so minimalize before inter-reducing the tails.
    minimal = []
    for g in sorted(basis, key=lambda g: key(lms[g])):
        if not any(divides(lms[h], lms[g]) for h in minimal):
            minimal.append(g)
    basis = minimal
    reduced = []
    for g in basis:
        lm, _, tail = divs[g]
        others = [divs[h] for h in basis if h != g]
        rem = _packed.reduce(dict(tail), others, p, pk)
        rem[lm] = 1
        reduced.append(MvPoly._raw(_packed.unpack_terms(rem, pk), field, nvars))
    return GroebnerBasis.from_polys(reduced, order, field, nvars)


# -- staircase --------------------------------------------------------------

@dataclass
class StaircaseProfile:
    """Monomial basis ``B`` of the quotient and its y-border structure.

    ``basis_monomials`` is grouped per element of ``c_monomials``: the run
    ``mu, y*mu, ..., y^(e-1)*mu`` for each ``mu`` of ``C`` in LEX-increasing
    order. ``exponents[i]`` is the ``e`` of ``c_monomials[i]``.
    """

    order: MonomialOrder
    basis_monomials: List[tuple]
    c_monomials: List[tuple]
    exponents: List[int]

    @property
    def dimension(self):
        return len(self.basis_monomials)

    @property
    def t(self):
        return len(self.c_monomials)

    def sorted_basis(self, order=None):
        order = order or self.order
        return sorted(self.basis_monomials, key=order.key)

    def block_ends(self):
        """Index in ``basis_monomials`` of the last element of each y-run."""
        out, pos = [], 0
        for e in self.exponents:
            pos += e
            out.append(pos - 1)
        return out


def check_zero_dimensional(lms, nvars):
    if one_monomial(nvars) in lms:
        return
    for k in range(nvars):
        if not any(m[k] > 0 and sum(m) == m[k] for m in lms):
            raise NotZeroDimensionalError("no leading monomial is a pure power of variable %d" % (k + 1))


def in_monomial_ideal(m, gens_lms) -> bool:
    return any(divides(l, m) for l in gens_lms)


def staircase(gb: GroebnerBasis) -> StaircaseProfile:
    lms = gb.leading_monomials()
    n = gb.nvars
    check_zero_dimensional(lms, n)
    one = one_monomial(n)
    if one in lms:
        return StaircaseProfile(gb.order, [], [], [])
    seen = {one}
    queue = deque([one])
    while queue:
        m = queue.popleft()
        for k in range(n):
            nm = m[:k] + (m[k] + 1,) + m[k + 1:]
            if nm not in seen and not in_monomial_ideal(nm, lms):
                seen.add(nm)
                queue.append(nm)
    c_monos = sorted((m for m in seen if m[-1] == 0), key=LEX.key)
    grouped, exps = [], []
    for mu in c_monos:
        e = 0
        while mu[:-1] + (e,) in seen:
            grouped.append(mu[:-1] + (e,))
            e += 1
        exps.append(e)
    assert len(grouped) == len(seen)
    return StaircaseProfile(gb.order, grouped, c_monos, exps)


# -- structural checks --------------------------------------------------------

@dataclass
class StabilityReport:
    stable: bool
    witness: Optional[Tuple[tuple, int]] = None  # (monomial, 0-based variable index)

    def __bool__(self):
        return self.stable


def check_stability_lms(lms, nvars) -> StabilityReport:
    for mu in lms:
        if mu[-1] == 0:
            continue
        for i in range(nvars - 1):
            nm = list(mu)
            nm[-1] -= 1
            nm[i] += 1
            if not in_monomial_ideal(tuple(nm), lms):
                return StabilityReport(False, (mu, i))
    return StabilityReport(True)


def check_stability(gb: GroebnerBasis) -> StabilityReport:
    return check_stability_lms(gb.leading_monomials(), gb.nvars)


def shape_parts(lex_gb: GroebnerBasis):
    """Return ``(h, [g_1, ..., g_{n-1}])`` if the basis is in shape position, else None."""
    n = lex_gb.nvars
    field = lex_gb.field
    if len(lex_gb.polys) != n:
        return None
    h = None
    g: List[Optional[UPoly]] = [None] * (n - 1)
    for f in lex_gb.polys:
        m = f.lm(LEX)
        if all(e == 0 for e in m[:-1]):
            if h is not None:
                return None
            coeffs = [0] * (m[-1] + 1)
            for mm, c in f.terms.items():
                coeffs[mm[-1]] = c
            h = UPoly(coeffs, field)
            continue
        if m[-1] != 0 or sum(m) != 1:
            return None
        i = m.index(1)
        if g[i] is not None or f.terms[m] != 1:
            return None
        coeffs = {}
        for mm, c in f.terms.items():
            if mm == m:
                continue
            if any(mm[:-1]):
                return None
            coeffs[mm[-1]] = (-c) % field.modulus
        top = max(coeffs, default=-1)
        g[i] = UPoly([coeffs.get(k, 0) for k in range(top + 1)], field)
    if h is None or any(x is None for x in g):
        return None
    if any(x.degree >= h.degree for x in g):
        return None
    return h, g


def is_shape_position(lex_gb: GroebnerBasis) -> bool:
    return lex_gb.order is LEX and shape_parts(lex_gb) is not None


# -- GB / system file format -------------------------------------------------

def parse_poly_file(text):
    """Parse the ``field:``/``vars:``/``order:`` header and ``;``-terminated polynomials.

    Lines containing ``=`` (a shape parametrization block) and ``#`` comments
    are skipped. Returns ``(field, var_names, order_or_None, polys)``.
    """
    header = {}
    body = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, val = line.partition(":")
        if sep and key.strip() in ("field", "vars", "order"):
            header[key.strip()] = val.strip()
            continue
        if "=" in line:
            continue
        body.append(line)
    if "field" not in header or "vars" not in header:
        raise ValueError("missing 'field:' or 'vars:' header")
    field = PrimeField(int(header["field"]))
    names = [v.strip() for v in header["vars"].split(",") if v.strip()]
    if not names:
        raise ValueError("no variables declared")
    order = MonomialOrder(header["order"].lower()) if "order" in header else None
    joined = " ".join(body)
    chunks = [c.strip() for c in joined.split(";")]
    if chunks and chunks[-1]:
        raise ValueError("polynomial not terminated by ';'")
    polys = [MvPoly.from_text(c, names, field) for c in chunks if c]
    return field, names, order, polys


def format_poly_file(field, var_names, polys, order: Optional[MonomialOrder], display_order=None):
    lines = ["field: %d" % field.modulus, "vars: %s" % ",".join(var_names)]
    if order is not None:
        lines.append("order: %s" % order.value)
    show = display_order or order or MonomialOrder.DRL
    lines.extend(f.to_text(var_names, show) + ";" for f in polys)
    return "\n".join(lines) + "\n"


def read_gb_file(text):
    field, names, order, polys = parse_poly_file(text)
    if order is None:
        raise ValueError("GB file needs an 'order:' header")
    return GroebnerBasis.from_polys(polys, order, field, len(names)), names


def write_gb_file(gb: GroebnerBasis, var_names) -> str:
    text = format_poly_file(gb.field, var_names, gb.polys, gb.order)
    parts = shape_parts(gb) if gb.order is LEX else None
    if parts is not None:
        h, g = parts
        y = var_names[-1]
        extra = ["h = %s;" % h.to_text(y)]
        for i in reversed(range(len(g))):
            extra.append("%s = %s;" % (var_names[i], g[i].to_text(y)))
        text += "\n".join(extra) + "\n"
    return text
