from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from hilbsign.intpoly import (
    X,
    DegreeUndefined,
    Polynomial,
    binomial_poly,
    evaluate,
    format_poly,
    forward_differences,
    is_integer_valued,
    poly_arith,
    sign_pattern,
)

from conftest import polys

F = Fraction


def test_canonical_trimming():
    assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert Polynomial([0, 0]).coeffs == ()
    assert Polynomial([0, 0]).degree is None
    assert Polynomial([3]).degree == 0
    with pytest.raises(DegreeUndefined):
        Polynomial().require_degree()


def test_immutable():
    p = Polynomial([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = ()


def test_rejects_floats():
    with pytest.raises(TypeError):
        Polynomial([0.5])


def test_poly_arith_examples():
    assert poly_arith("add", X, 1) == Polynomial([1, 1])
    assert poly_arith("mul", 5 * X - 5, 2 * X + 1) == Polynomial([-5, -5, 10])
    d2 = 2 * X**2 - X - 1
    assert poly_arith("scale", d2, 5) == Polynomial([-5, -5, 10])
    with pytest.raises(TypeError):
        poly_arith("scale", X, X)
    with pytest.raises(ValueError):
        poly_arith("div", X, X)


def test_evaluate_examples():
    assert evaluate(X**2, 3) == 9
    assert evaluate(Polynomial(), 7) == 0
    assert evaluate((X**2 + X) * F(1, 2), 4) == 10


def test_binomial_poly_examples():
    assert binomial_poly(1, 2) == Polynomial([0, F(1, 2), F(1, 2)])
    assert binomial_poly(0, 1) == X
    expected = (X - 3) * (X - 4) * (X - 5) * (X - 6) * F(1, 24)
    assert binomial_poly(-3, 4) == expected
    # hand expansion of (x-3)(x-4)(x-5)(x-6) = x^4 - 18x^3 + 119x^2 - 342x + 360
    assert binomial_poly(-3, 4) == Polynomial([360, -342, 119, -18, 1]) * F(1, 24)
    with pytest.raises(ValueError):
        binomial_poly(0, 0)


def test_forward_differences_examples():
    assert forward_differences(X**2) == (0, 1, 2)
    assert forward_differences(Polynomial([4])) == (4,)
    assert forward_differences((X**2 + X) * F(1, 2)) == (0, 1, 1)
    assert forward_differences(Polynomial()) == ()


def test_is_integer_valued_examples():
    assert not is_integer_valued(X * F(1, 2))
    assert is_integer_valued((X**2 + X) * F(1, 2))
    assert is_integer_valued(3 * X**2)
    assert is_integer_valued(Polynomial())


def test_sign_pattern_examples():
    assert sign_pattern(13 * X**2 + X - 1) == (-1, 1)
    assert sign_pattern(18 * X**3) == (0, 0, 0)
    assert sign_pattern(Polynomial([5])) == ()
    with pytest.raises(DegreeUndefined):
        sign_pattern(Polynomial())


def test_format():
    assert format_poly(13 * X**2 + X - 1) == "13x^2 + x - 1"
    assert format_poly(-X**2 + 1) == "-x^2 + 1"
    assert format_poly((X**2 + X) * F(1, 2)) == "1/2x^2 + 1/2x"
    assert format_poly(Polynomial()) == "0"
    assert format_poly(Polynomial([F(-3, 4)])) == "-3/4"


points = st.integers(-50, 50)


@given(polys, polys, points)
def test_arith_matches_evaluation(f, g, x):
    assert evaluate(f + g, x) == evaluate(f, x) + evaluate(g, x)
    assert evaluate(f - g, x) == evaluate(f, x) - evaluate(g, x)
    assert evaluate(f * g, x) == evaluate(f, x) * evaluate(g, x)


@given(polys, st.fractions(max_denominator=9), points)
def test_scale_matches_evaluation(f, t, x):
    assert evaluate(poly_arith("scale", f, t), x) == t * evaluate(f, x)


@given(st.integers(-8, 8), st.integers(1, 7), st.integers(-20, 20))
def test_binomial_poly_matches_comb(s, k, x):
    v = evaluate(binomial_poly(s, k), x)
    if x + s >= 0:
        # math.comb is 0 for 0 <= n < k, matching the polynomial's zeros
        assert v == comb(x + s, k)


@given(st.integers(-8, 8), st.integers(2, 7))
def test_pascal_identity(s, k):
    assert binomial_poly(s, k) - binomial_poly(s - 1, k) == binomial_poly(s - 1, k - 1)


@given(polys, st.lists(st.integers(-10**6, 10**6), max_size=5))
def test_integer_valued_matches_probe(f, extra):
    window = list(range(-10, 11)) + extra
    probe = all(evaluate(f, x).denominator == 1 for x in window)
    assert is_integer_valued(f) == probe


@given(polys)
def test_sign_pattern_ignores_leading(f):
    if f.is_zero():
        return
    s = sign_pattern(f)
    assert len(s) == f.degree
    flipped = Polynomial(f.coeffs[:-1] + (-f.leading,))
    assert sign_pattern(flipped) == s


@given(st.integers(-30, 30), st.integers(1, 9))
def test_binomial_poly_matches_product(s, k):
    p = Polynomial([1])
    for j in range(k):
        p = p * (X + (s - j))
    assert binomial_poly(s, k) == p * F(1, factorial(k))
