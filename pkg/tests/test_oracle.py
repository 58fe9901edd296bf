import itertools
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hilbsign.intpoly import Polynomial, binomial_poly, evaluate
from hilbsign.oracle import (
    DISABLE_ENV,
    MonomialIdeal,
    StabilizationNotDetected,
    count_monomials,
    cross_check,
    hilbert_table,
    interpolate_eventual,
    minimalize,
)
from hilbsign.oracle import _kernels


def brute_count(ideal, t):
    """Product over all exponent boxes; shares nothing with the kernels."""
    n = ideal.n_vars
    total = 0
    for e in itertools.product(range(t + 1), repeat=n):
        if sum(e) != t:
            continue
        if any(all(a >= g for a, g in zip(e, gen)) for gen in ideal.generators):
            continue
        total += 1
    return total


XX_XY = MonomialIdeal(3, ((2, 0, 0), (1, 1, 0)))


def test_ideal_minimalizes():
    I = MonomialIdeal(2, ((1, 0), (2, 0), (1, 1), (0, 3)))
    assert I.generators == ((0, 3), (1, 0))
    assert minimalize([(1, 1), (1, 1)]) == ((1, 1),)
    assert MonomialIdeal(2, ((0, 3), (1, 0))) == I


@pytest.mark.parametrize("gens", [((0, 0),), ((1,),), ((-1, 2),)])
def test_ideal_rejects_bad_generators(gens):
    with pytest.raises(ValueError):
        MonomialIdeal(2, gens)


def test_count_examples():
    assert count_monomials(MonomialIdeal(2), 3) == 4
    # y^2, yz, z^2, xz
    assert count_monomials(XX_XY, 2) == 4
    assert count_monomials(MonomialIdeal(1, ((3,),)), 5) == 0


def test_table_examples():
    assert hilbert_table(MonomialIdeal(2), 4) == (1, 2, 3, 4, 5)
    assert hilbert_table(MonomialIdeal(1, ((2,),)), 4) == (1, 1, 0, 0, 0)
    assert hilbert_table(XX_XY, 5) == (1, 3, 4, 5, 6, 7)


def test_interpolate_examples():
    assert interpolate_eventual((1, 2, 3, 4, 5, 6, 7, 8)) == (Polynomial([1, 1]), 0)
    assert interpolate_eventual((1, 1, 0, 0, 0, 0)) == (Polynomial(), 2)
    assert interpolate_eventual((1, 3, 4, 5, 6, 7, 8)) == (Polynomial([2, 1]), 1)


def test_interpolate_needs_enough_points():
    with pytest.raises(StabilizationNotDetected):
        interpolate_eventual((1, 4))
    # a cubic needs six trailing values
    with pytest.raises(StabilizationNotDetected):
        interpolate_eventual((1, 4, 10, 20, 35))


@pytest.mark.parametrize("n, poly, params", [
    (2, Polynomial([1, 1]), (1, 1)),
    (4, binomial_poly(3, 3), (1, 1, 1, 1)),
])
def test_cross_check_rings(n, poly, params):
    res = cross_check(MonomialIdeal(n), 20)
    assert res.polynomial == poly
    assert res.params == params
    assert res.stabilization == 0
    assert res.verdict


def test_cross_check_quotient():
    res = cross_check(XX_XY, 20)
    assert res.polynomial == Polynomial([2, 1])
    assert res.params == (2, 1)
    assert res.stabilization == 1
    assert res.verdict


ideals = st.integers(1, 4).flatmap(lambda n: st.builds(
    MonomialIdeal,
    st.just(n),
    st.lists(st.tuples(*[st.integers(0, 3)] * n).filter(any), max_size=4).map(tuple),
))


@settings(max_examples=80, deadline=None)
@given(ideals, st.integers(0, 7))
def test_kernels_agree_with_brute_force(ideal, t):
    gens = ideal.as_array()
    expected = brute_count(ideal, t)
    assert _kernels.count_numpy(gens, t) == expected
    assert _kernels.count_walk_python(gens, t) == expected
    if _kernels.NUMBA_AVAILABLE:
        assert _kernels.count_numba(gens, t) == expected


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), st.integers(0, 30))
def test_free_count_closed_form(n, t):
    assert count_monomials(MonomialIdeal(n), t) == comb(t + n - 1, n - 1)
    if t <= 12:
        total = sum(b.shape[0] for b in _kernels.compositions(t, n))
        assert total == comb(t + n - 1, n - 1)


@settings(max_examples=40, deadline=None)
@given(ideals, st.data())
def test_adding_generator_never_increases(ideal, data):
    n = ideal.n_vars
    gen = data.draw(st.tuples(*[st.integers(0, 3)] * n).filter(any))
    bigger = ideal.add(gen)
    small = hilbert_table(ideal, 8)
    large = hilbert_table(bigger, 8)
    assert all(b <= a for a, b in zip(small, large))


@settings(max_examples=40, deadline=None)
@given(ideals)
def test_cross_check_corpus_random(ideal):
    res = cross_check(ideal, 22)
    assert res.verdict
    assert res.table[0] == 1
    for t in range(res.stabilization, len(res.table)):
        assert evaluate(res.polynomial, t) == res.table[t]


def test_env_flag_selects_numpy(monkeypatch):
    monkeypatch.setenv(DISABLE_ENV, "1")
    assert not _kernels.use_numba()
    assert count_monomials(XX_XY, 9) == 11
    monkeypatch.delenv(DISABLE_ENV)
    assert _kernels.use_numba() == _kernels.NUMBA_AVAILABLE


def test_compositions_chunks_cover_all():
    blocks = list(_kernels.compositions(6, 3))
    rows = np.vstack(blocks)
    assert rows.shape == (comb(8, 2), 3)
    assert (rows.sum(axis=1) == 6).all() and (rows >= 0).all()
    assert len({tuple(r) for r in rows}) == rows.shape[0]
