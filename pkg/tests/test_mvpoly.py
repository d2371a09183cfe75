import random

import pytest
from hypothesis import given, strategies as st

from changeorder import _text
from changeorder.groebner import buchberger
from changeorder.mvpoly import DRL, LEX, MvPoly, compare, leading_term, normal_form

from golden import F29, GENERATORS, NAMES, drl_gb, polys

monos3 = st.tuples(*[st.integers(0, 6)] * 3)


def drl_reference(a, b):
    """Total degree first, then the last differing exponent decides (smaller wins)."""
    if sum(a) != sum(b):
        return 1 if sum(a) > sum(b) else -1
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return 1 if x < y else -1
    return 0


def test_compare_examples():
    x2sq, x1y = (0, 2, 0), (1, 0, 1)
    assert compare(DRL, x2sq, x1y) == 1
    for order in (DRL, LEX):
        assert compare(order, (0, 0, 0), (0, 0, 1)) == -1
        assert compare(order, (0, 0, 0), (0, 0, 0)) == 0
    assert compare(LEX, (1, 0, 0), (0, 7, 9)) == 1
    with pytest.raises(ValueError):
        compare(LEX, (1, 0), (1, 0, 0))


def test_drl_agrees_with_reference():
    rng = random.Random(7)
    for _ in range(10_000):
        n = rng.randint(1, 5)
        a = tuple(rng.randint(0, 4) for _ in range(n))
        b = tuple(rng.randint(0, 4) for _ in range(n))
        assert compare(DRL, a, b) == drl_reference(a, b)


@given(monos3, monos3, monos3)
def test_orders_are_multiplicative(a, b, m):
    mul = lambda u: tuple(x + y for x, y in zip(u, m))
    for order in (DRL, LEX):
        if compare(order, a, b) > 0:
            assert compare(order, mul(a), mul(b)) > 0


@given(st.dictionaries(monos3, st.integers(1, 28), min_size=1, max_size=12))
def test_leading_term_is_the_maximum(terms):
    f = MvPoly(terms, F29, 3)
    for order in (DRL, LEX):
        m, c = leading_term(order, f)
        assert all(compare(order, m, o) >= 0 for o in terms)
        assert c == terms[m]


def test_leading_term_examples():
    f = MvPoly({(1, 2, 3): 5}, F29, 3)
    assert leading_term(DRL, f) == ((1, 2, 3), 5)
    assert [g.lm(DRL) for g in polys([
        "y^4+3*y^3+15*x1*y+23*x2*y+3*y^2+26*x2+22*y",
        "x2*y^2+5*x1*y+28*x2*y+3*y^2+19*x1+15*x2+17",
        "x1*y^2+18*y^3+24*x1*y+27*x2*y+19*y^2+2*x1+9*y+3",
        "x2^2+12*x1*y+26*x2*y+5*y^2+9*x1+6*x2+8*y+6",
        "x1*x2+6*x1*y+x2*y+17*y^2+28*x1+12*x2+8*y+11",
        "x1^2+x1*y+10*x2*y+2*y^2+3*x1+16*x2+21"])] == \
        [(0, 0, 4), (0, 1, 2), (1, 0, 2), (0, 2, 0), (1, 1, 0), (2, 0, 0)]
    with pytest.raises(ValueError):
        leading_term(DRL, MvPoly.zero(F29, 3))


def test_normal_form_of_y4():
    g = drl_gb()
    nf = normal_form(MvPoly.monomial((0, 0, 4), F29), g.polys, DRL)
    expected = MvPoly.from_text("26*y^3+26*y^2+7*y+6*x2*y+3*x2+14*x1*y", NAMES, F29)
    assert nf == expected


def test_normal_form_edge_cases():
    g = drl_gb()
    f = MvPoly.from_text("3*x1*y + 2*y^3 + 1", NAMES, F29)
    assert normal_form(f, g.polys, DRL) == f
    assert normal_form(f, [], DRL) == f


def test_generators_reduce_to_zero():
    gens = polys(GENERATORS)
    gb = buchberger(gens, DRL)
    for f in gens:
        assert normal_form(f, gb.polys, DRL).is_zero()


@given(st.dictionaries(monos3, st.integers(1, 28), max_size=10),
       st.dictionaries(monos3, st.integers(1, 28), max_size=10),
       st.integers(0, 28))
def test_normal_form_is_idempotent_and_linear(t1, t2, c):
    g = drl_gb().polys
    f1, f2 = MvPoly(t1, F29, 3), MvPoly(t2, F29, 3)
    n1, n2 = normal_form(f1, g, DRL), normal_form(f2, g, DRL)
    assert normal_form(n1, g, DRL) == n1
    assert normal_form(f1.scale(c) + f2, g, DRL) == n1.scale(c) + n2
    lms = [p.lm(DRL) for p in g]
    assert not any(all(a <= b for a, b in zip(l, m)) for m in n1.terms for l in lms)


def test_text_parsing():
    f = MvPoly.from_text("-x1^2*y + 3*y**2*x2 - 2 + x1*2", NAMES, F29)
    assert f.terms == {(2, 0, 1): 28, (0, 1, 2): 3, (0, 0, 0): 27, (1, 0, 0): 2}
    assert MvPoly.from_text(f.to_text(NAMES, DRL), NAMES, F29) == f
    assert f.to_text(NAMES, LEX).startswith("28*x1^2*y")
    with pytest.raises(_text.ParseError):
        MvPoly.from_text("x3 + 1", NAMES, F29)
    with pytest.raises(_text.ParseError):
        MvPoly.from_text("x1 + + ", NAMES, F29)


def test_arithmetic():
    a = MvPoly.from_text("x1 + y", NAMES, F29)
    b = MvPoly.from_text("x1 - y", NAMES, F29)
    assert a * b == MvPoly.from_text("x1^2 - y^2", NAMES, F29)
    assert (a - a).is_zero()
    assert a.mul_term((0, 1, 0), 2) == MvPoly.from_text("2*x1*x2 + 2*x2*y", NAMES, F29)
    assert a.monic(DRL) == a and (a * 3).monic(DRL) == a
