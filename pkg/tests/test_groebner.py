import itertools
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from changeorder.field import PrimeField
from changeorder.groebner import (
    GroebnerBasis,
    NotZeroDimensionalError,
    buchberger,
    check_stability,
    check_stability_lms,
    format_poly_file,
    is_shape_position,
    parse_poly_file,
    read_gb_file,
    s_polynomial,
    staircase,
    write_gb_file,
)
from changeorder.mvpoly import DRL, LEX, MvPoly, default_var_names
from changeorder.pipeline import random_system

from golden import BASIS_MONOMIALS, C_MONOMIALS, EXPONENTS, F29, NAMES, drl_gb, lex_gb, polys

F101 = PrimeField(101)


def sympy_gb(gens, order, p):
    n = gens[0].nvars
    xs = sympy.symbols(" ".join(default_var_names(n)))
    xs = xs if isinstance(xs, tuple) else (xs,)
    exprs = [sum(c * sympy.prod([v ** e for v, e in zip(xs, m)]) for m, c in f.terms.items())
             for f in gens]
    g = sympy.groebner(exprs, *xs, order="grevlex" if order is DRL else "lex", modulus=p)
    out = []
    for e in g.exprs:
        poly = sympy.Poly(e, *xs, modulus=p)
        out.append(MvPoly({m: int(c) % p for m, c in poly.terms()}, PrimeField(p), n))
    return GroebnerBasis.from_polys(out, order)


def brute_staircase(lms, n):
    bound = max(max(m) for m in lms) + 1
    return {m for m in itertools.product(range(bound), repeat=n)
            if not any(all(a <= b for a, b in zip(l, m)) for l in lms)}


def exhaustive_stable(lms, n):
    bound = max(max(m) for m in lms) + 1
    inside = lambda m: any(all(a <= b for a, b in zip(l, m)) for l in lms)
    for m in itertools.product(range(bound + 1), repeat=n):
        if m[-1] == 0 or not inside(m):
            continue
        for i in range(n - 1):
            nm = list(m)
            nm[-1] -= 1
            nm[i] += 1
            if not inside(tuple(nm)):
                return False
    return True


def test_reduced_bases_are_fixed_points():
    for gb, order in ((drl_gb(), DRL), (lex_gb(), LEX)):
        assert buchberger(gb.polys, order) == gb
        assert gb.is_reduced() and gb.is_groebner()


def test_printed_drl_basis_gives_printed_lex_basis():
    assert buchberger(drl_gb().polys, LEX) == lex_gb()


def test_sorted_by_increasing_leading_monomial():
    assert drl_gb().leading_monomials() == [(0, 2, 0), (1, 1, 0), (2, 0, 0), (0, 1, 2), (1, 0, 2), (0, 0, 4)]
    assert lex_gb().leading_monomials() == [(0, 0, 8), (0, 1, 0), (1, 0, 0)]


def test_s_polynomial_cancels_leading_terms():
    f, g = polys(["x1^2 + y", "x1*x2 + 1"])
    s = s_polynomial(f, g, DRL)
    assert s == MvPoly.from_text("x2*y - x1", NAMES, F29)


@pytest.mark.parametrize("n,d,seed", [(2, 2, 0), (2, 3, 1), (3, 2, 2), (2, 4, 3)])
def test_buchberger_matches_sympy(n, d, seed):
    gens = random_system(n, d, 101, seed)
    for order in (DRL, LEX):
        assert buchberger(gens, order) == sympy_gb(gens, order, 101)


def test_buchberger_matches_sympy_on_positive_dimensional_input():
    names = ["x1", "x2", "y"]
    gens = [MvPoly.from_text(s, names, F101) for s in ["x1*x2 - y^2", "x1^2*y + x2 + 3"]]
    for order in (DRL, LEX):
        assert buchberger(gens, order) == sympy_gb(gens, order, 101)


@pytest.mark.parametrize("seed", range(3))
def test_output_is_confluent_and_a_membership_oracle(seed):
    rng = random.Random(seed)
    gens = random_system(3, 2, 101, seed)
    gb = buchberger(gens, DRL)
    assert gb.is_groebner() and gb.is_reduced()
    for _ in range(5):
        f = MvPoly.zero(F101, 3)
        for g in gens:
            mult = MvPoly({m: rng.randrange(101) for m in itertools.product(range(3), repeat=3)
                           if sum(m) <= 2}, F101, 3)
            f = f + mult * g
        assert gb.normal_form(f).is_zero()
        assert not gb.normal_form(f + MvPoly.monomial((0, 0, 0), F101)).is_zero()


def test_staircase_of_worked_example():
    prof = staircase(drl_gb())
    assert prof.basis_monomials == BASIS_MONOMIALS
    assert prof.dimension == 8
    assert prof.c_monomials == C_MONOMIALS
    assert prof.exponents == EXPONENTS
    assert prof.block_ends() == [3, 5, 7]
    assert prof.sorted_basis()[0] == (0, 0, 0)


def test_staircase_of_a_point():
    gb = GroebnerBasis.from_polys(polys(["x1", "x2", "y"]), DRL)
    prof = staircase(gb)
    assert prof.basis_monomials == [(0, 0, 0)]
    assert prof.c_monomials == [(0, 0, 0)] and prof.exponents == [1]


def test_staircase_rejects_positive_dimension():
    gb = GroebnerBasis.from_polys(polys(["x1^2", "y^3"]), DRL)
    with pytest.raises(NotZeroDimensionalError):
        staircase(gb)


@given(st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_staircase_matches_brute_force(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    lms = [tuple(rng.randint(1, 4) if k == i else 0 for k in range(n)) for i in range(n)]
    lms += [tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(rng.randint(0, 3))]
    lms = [m for m in lms if any(m)]
    gb = GroebnerBasis.from_polys([MvPoly.monomial(m, F101) for m in set(lms)], DRL)
    prof = staircase(gb)
    assert set(prof.basis_monomials) == brute_staircase(lms, n)
    assert sum(prof.exponents) == prof.dimension
    for mu, e in zip(prof.c_monomials, prof.exponents):
        assert mu[:-1] + (e - 1,) in prof.basis_monomials
        assert mu[:-1] + (e,) not in prof.basis_monomials
    assert check_stability_lms(gb.leading_monomials(), n).stable == exhaustive_stable(lms, n)


def test_stability_examples():
    assert check_stability(drl_gb()).stable
    vacuous = GroebnerBasis.from_polys(polys(["x1^2", "x2"]), DRL)
    assert check_stability(vacuous).stable
    two = PrimeField(101)
    gb = GroebnerBasis.from_polys([MvPoly.monomial((2, 0), two), MvPoly.monomial((0, 2), two)], DRL)
    rep = check_stability(gb)
    assert not rep.stable and rep.witness == ((0, 2), 0)


def test_shape_position_examples():
    two = ["x1", "y"]
    gb = GroebnerBasis.from_polys([MvPoly.from_text(s, two, F29) for s in ["y - 3", "x1 - 5"]], LEX)
    assert is_shape_position(gb)
    assert is_shape_position(lex_gb())
    gb = GroebnerBasis.from_polys([MvPoly.from_text(s, two, F29) for s in ["x1^2", "y"]], LEX)
    assert not is_shape_position(gb)
    assert not is_shape_position(drl_gb())


def test_gb_file_round_trip():
    text = write_gb_file(lex_gb(), NAMES)
    lines = text.splitlines()
    assert lines[:3] == ["field: 29", "vars: x1,x2,y", "order: lex"]
    assert lines[-3].startswith("h = ") and lines[-2].startswith("x2 = ") and lines[-1].startswith("x1 = ")
    gb, names = read_gb_file(text)
    assert gb == lex_gb() and names == NAMES
    gb, _ = read_gb_file(write_gb_file(drl_gb(), NAMES))
    assert gb == drl_gb()


def test_system_file_parsing():
    text = "# a comment\nfield: 29\nvars: x1,x2,y\nx1 + y;\nx2\n - 3*y^2;\n"
    field, names, order, gens = parse_poly_file(text)
    assert field == F29 and names == NAMES and order is None
    assert gens == polys(["x1 + y", "x2 - 3*y^2"])
    assert parse_poly_file(format_poly_file(field, names, gens, None))[3] == gens
    with pytest.raises(ValueError):
        parse_poly_file("vars: x,y\nx;")
    with pytest.raises(ValueError):
        parse_poly_file("field: 29\nvars: x,y\nx + y")


def test_redundant_generators_are_dropped():
    # starting from a DRL basis, several LEX leading monomials are multiples of others
    from instances import instance
    _, gb, _ = instance(3, 2, 0, "pure", 101)
    lex = buchberger(gb.polys, LEX)
    assert lex.is_reduced()
    assert lex == sympy_gb(gb.polys, LEX, 101)
