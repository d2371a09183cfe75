"""End-to-end change of order: a DRL basis in, the reduced LEX basis out.

Three routes share one result type so that the command line and the
benchmark can compare them directly: the Hermite-form route, the sparse
FGLM baseline, and plain Buchberger under LEX.
"""

from __future__ import annotations

import itertools
import logging
import random
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .field import PrimeField
from .fglm import build_mult_matrix, build_mult_matrix_nf, sparse_fglm_shape
from .groebner import (
    GroebnerBasis,
    StaircaseProfile,
    buchberger,
    check_stability,
    shape_parts,
    staircase,
)
from .lexgb import ShapeLexBasis, read_off_lex
from .modbasis import basis_from_border, basis_from_stable_gb
from .mvpoly import DRL, LEX, MvPoly, one_monomial
from .polymat import hermite_normal_form

log = logging.getLogger(__name__)

DEFAULT_MODULUS = 536870923
METHODS = ("hnf", "fglm", "buchberger")


@dataclass
class Solution:
    lex_gb: GroebnerBasis
    shape: Optional[ShapeLexBasis]
    method: str
    fallback: bool = False
    notes: List[str] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)
    profile: Optional[StaircaseProfile] = None
    stable: Optional[bool] = None


@contextmanager
def timed(timings, key):
    start = time.perf_counter()
    try:
        yield
    finally:
        if timings is not None:
            timings[key] = timings.get(key, 0.0) + time.perf_counter() - start


def random_system(n, d, p=DEFAULT_MODULUS, seed=0) -> List[MvPoly]:
    """``n`` dense polynomials in ``n`` variables of total degree ``d``.

    Every monomial of degree at most ``d`` gets a coefficient drawn uniformly
    from the nonzero residues, so the result is fully determined by ``seed``.
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    fld = PrimeField(p)
    rng = random.Random(seed)
    monos = sorted((m for m in itertools.product(range(d + 1), repeat=n) if sum(m) <= d),
                   key=DRL.key)
    return [MvPoly({m: rng.randrange(1, p) for m in monos}, fld, n) for _ in range(n)]


def drl_basis(gens, timings=None) -> GroebnerBasis:
    with timed(timings, "buchberger_drl"):
        return buchberger(gens, DRL)


def _unit_ideal(gb):
    one = MvPoly.monomial(one_monomial(gb.nvars), gb.field)
    return GroebnerBasis.from_polys([one], LEX, gb.field, gb.nvars)


def lex_by_buchberger(gb: GroebnerBasis, timings=None) -> GroebnerBasis:
    with timed(timings, "buchberger_lex"):
        return buchberger(gb.polys, LEX)


def via_hnf(gb: GroebnerBasis, timings=None, certify=True) -> Solution:
    """Hermite form of the module basis, then read-off of the LEX basis.

    Falls back to the border construction when the leading terms are not
    stable. Outside shape position the read-off relies on an assumption the
    construction cannot check, so with ``certify`` the result is compared
    against Buchberger under LEX and replaced by it on disagreement.
    """
    timings = {} if timings is None else timings
    prof = staircase(gb)
    sol = Solution(None, None, "hnf", timings=timings, profile=prof)
    if prof.dimension == 0:
        sol.lex_gb = _unit_ideal(gb)
        return sol
    with timed(timings, "build_P"):
        report = check_stability(gb)
        sol.stable = report.stable
        if report.stable and gb.order is DRL:
            mb = basis_from_stable_gb(gb, prof)
        else:
            sol.fallback = True
            sol.notes.append("leading terms not stable (witness %r); using border normal forms"
                             % (report.witness,))
            mb = basis_from_border(gb, prof)
    with timed(timings, "hnf"):
        h = hermite_normal_form(mb.matrix, transform=False).h
    with timed(timings, "read_off"):
        out = read_off_lex(h, mb.c_monomials, gb=gb)
    sol.lex_gb, sol.shape = out.lex_gb, out.shape
    if out.shape is None:
        sol.fallback = True
        sol.notes.append("shape position not detected; LEX basis read off without certificate")
        if certify:
            oracle = lex_by_buchberger(gb, timings)
            if oracle != out.lex_gb:
                sol.notes.append("read-off basis refuted by Buchberger under LEX; using the latter")
                sol.lex_gb = oracle
            else:
                sol.notes.append("read-off basis confirmed by Buchberger under LEX")
    return sol


def via_fglm(gb: GroebnerBasis, seed=0, timings=None) -> Solution:
    timings = {} if timings is None else timings
    prof = staircase(gb)
    sol = Solution(None, None, "fglm", timings=timings, profile=prof)
    if prof.dimension == 0:
        sol.lex_gb = _unit_ideal(gb)
        return sol
    with timed(timings, "build_M"):
        report = check_stability(gb)
        sol.stable = report.stable
        if report.stable and gb.order is DRL:
            m = build_mult_matrix(gb, prof)
        else:
            sol.fallback = True
            sol.notes.append("leading terms not stable; multiplication matrix from normal forms")
            m = build_mult_matrix_nf(gb, prof)
    with timed(timings, "sparse_fglm"):
        shape = sparse_fglm_shape(m, prof, seed=seed, gb=gb)
    if shape is None:
        sol.fallback = True
        sol.notes.append("no shape parametrization found; using Buchberger under LEX")
        sol.lex_gb = lex_by_buchberger(gb, timings)
        parts = shape_parts(sol.lex_gb)
        sol.shape = ShapeLexBasis(*parts) if parts else None
        return sol
    sol.shape = shape
    sol.lex_gb = shape.to_groebner(gb.nvars)
    return sol


def via_buchberger(polys, timings=None) -> Solution:
    timings = {} if timings is None else timings
    with timed(timings, "buchberger_lex"):
        lex = buchberger(polys, LEX)
    parts = shape_parts(lex)
    return Solution(lex, ShapeLexBasis(*parts) if parts else None, "buchberger", timings=timings)


def solve(gens, method="hnf", seed=0, drl_gb: Optional[GroebnerBasis] = None) -> Solution:
    if method not in METHODS:
        raise ValueError("unknown method %r" % method)
    timings: Dict[str, float] = {}
    if method == "buchberger":
        return via_buchberger(drl_gb.polys if drl_gb is not None else gens, timings)
    gb = drl_gb if drl_gb is not None else drl_basis(gens, timings)
    if method == "hnf":
        return via_hnf(gb, timings)
    return via_fglm(gb, seed, timings)
