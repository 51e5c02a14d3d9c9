import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import discriminant_by_sylvester, sylvester_resultant
from quadindex.errors import InvalidArgument
from quadindex.zpoly import (
    IntPoly,
    Quadrinomial,
    ScopeFailure,
    binomial_weight,
    check_scope,
    derivative,
    discriminant,
    discriminant_formula,
    expand,
    format_poly,
    parse_poly,
    poly_discriminant,
    resultant,
)

small_polys = st.lists(st.integers(-30, 30), min_size=1, max_size=8).map(IntPoly).filter(lambda f: not f.is_zero())


def test_intpoly_basics():
    f = IntPoly.from_high([1, 4, 0, 0, 0, 1, 3])
    assert f.degree == 6 and f.is_monic() and f.lc == 1
    assert str(f) == "x^6 + 4*x^5 + x + 3"
    assert f(1) == 9 and f(-1) == 1 - 4 - 1 + 3
    assert IntPoly([0, 0]).degree == -1 and IntPoly([0]).is_zero()
    assert derivative(f).to_high() == [6, 20, 0, 0, 0, 1]
    assert IntPoly([2, 4, 6]).content() == 2


@settings(max_examples=100, deadline=None)
@given(small_polys, small_polys, small_polys)
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert f - f == IntPoly()
    assert (f * g)(3) == f(3) * g(3)


def test_parse_and_format_round_trip():
    f = parse_poly(" 1, 4,0,0 ,0,1,3 ")
    assert f == expand(Quadrinomial(6, 4, 1, 3))
    assert format_poly(f) == "1,4,0,0,0,1,3"
    assert parse_poly(format_poly(f)) == f


@pytest.mark.parametrize("bad", ["", "1,,2", "1,x,3", "1;2", ","])
def test_parse_rejects_garbage(bad):
    with pytest.raises(InvalidArgument):
        parse_poly(bad)


@settings(max_examples=150, deadline=None)
@given(small_polys, small_polys)
def test_resultant_matches_sylvester(f, g):
    if f.degree == 0 and g.degree == 0:
        return
    assert resultant(f, g) == sylvester_resultant(f.to_high(), g.to_high())


def test_resultant_zero_input_rejected():
    with pytest.raises(InvalidArgument):
        resultant(IntPoly(), IntPoly([1, 1]))


def test_resultant_detects_common_root():
    f = IntPoly.from_high([1, -3, 2])  # (x - 1)(x - 2)
    g = IntPoly.from_high([1, 5, -6])  # (x - 1)(x + 6)
    assert resultant(f, g) == 0


def test_poly_discriminant_small_cases():
    assert poly_discriminant(IntPoly.from_high([1, 0, 1])) == -4
    # x^3 + p x + q -> -4p^3 - 27q^2
    assert poly_discriminant(IntPoly.from_high([1, 0, 2, 3])) == -4 * 8 - 27 * 9
    with pytest.raises(InvalidArgument):
        poly_discriminant(IntPoly.from_high([2, 0, 1]))


def test_discriminant_examples():
    assert discriminant(Quadrinomial(6, 4, 1, 3)) == 3**2 * 7561 * 15269
    assert discriminant(Quadrinomial(5, 1, 3, 6)) == 3**3 * 5 * 18691
    assert discriminant(Quadrinomial(6, 9, 3, 18)) == 3**6 * 7 * 101 * 149 * 2270627


def test_formula_against_sylvester_and_sympy():
    x = sympy.symbols("x")
    rng = random.Random(11)
    for n in range(5, 13):
        for _ in range(6):
            a, b, c = (rng.choice([v for v in range(-20, 21) if v]) for _ in range(3))
            q = Quadrinomial(n, a, b, c)
            want = discriminant_by_sylvester(n, a, b, c)
            assert discriminant_formula(q) == want
            assert int(sympy.discriminant(x**n + a * x ** (n - 1) + b * x + c, x)) == want


def test_formula_large_degree_matches_resultant():
    q = Quadrinomial(40, 16, -7, 5)
    assert discriminant(q, "both") == poly_discriminant(expand(q))


def test_discriminant_cap():
    with pytest.raises(InvalidArgument):
        discriminant(Quadrinomial(30030, 44100, 143, 7507))


def test_binomial_weight_integral():
    for n in range(5, 40):
        for i in range((n - 3) // 2 + 1):
            assert binomial_weight(n, i) >= 1


@pytest.mark.parametrize(
    "q,reason",
    [
        (Quadrinomial(4, 1, 1, 1), ScopeFailure.DEGREE_TOO_SMALL),
        (Quadrinomial(6, 4, 0, 3), ScopeFailure.ZERO_COEFFICIENT),
        (Quadrinomial(6, -4, 1, 3), ScopeFailure.A_NONPOSITIVE),
        (Quadrinomial(6, 5, 1, 3), ScopeFailure.A_NOT_DIVIDING_N_SQUARED),
        (Quadrinomial(6, 2, 1, 3), ScopeFailure.GCD_A_K_NOT_ONE),
    ],
)
def test_scope_failures(q, reason):
    s = check_scope(q)
    assert not s.applicable and s.failure_reason is reason


def test_scope_applicable():
    assert check_scope(Quadrinomial(6, 4, 1, 3)).k == 9
    assert check_scope(Quadrinomial(30030, 44100, 143, 7507)).k == 30030**2 // 44100


def test_quadrinomial_needs_distinct_monomials():
    with pytest.raises(InvalidArgument):
        Quadrinomial(2, 1, 1, 1)
