"""Counting kernels: standard monomials of degree t outside a monomial ideal.

Two interchangeable implementations share one calling convention
``count(gens, t) -> int`` where ``gens`` is an ``(k, n)`` int64 array of
minimal generator exponents (``k`` may be 0).

* ``count_numba``: depth-first walk over weak compositions, compiled with
  ``numba.njit``.  Each generator is tested once per path, at the deepest
  variable in its support, and a hit prunes the whole remaining range of
  that variable (divisibility is monotone in the exponent).
* ``count_numpy``: materializes compositions in chunks by stars and bars
  and filters them with a broadcast comparison.

Set ``HILBSIGN_DISABLE_NUMBA=1`` to force the numpy path.
"""
from __future__ import annotations

import os
from itertools import combinations, islice
from math import comb

import numpy as np

DISABLE_ENV = "HILBSIGN_DISABLE_NUMBA"
_CHUNK = 1 << 15

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

NUMBA_AVAILABLE = numba is not None


def _njit(fn):
    return numba.njit(cache=True)(fn) if NUMBA_AVAILABLE else fn


def _by_last_support(gens: np.ndarray):
    """Sort generators by their last nonzero coordinate; return (gens, starts)."""
    k, n = gens.shape
    last = np.empty(k, dtype=np.int64)
    for g in range(k):
        last[g] = np.flatnonzero(gens[g])[-1]
    order = np.argsort(last, kind="stable")
    starts = np.searchsorted(last[order], np.arange(n + 1)).astype(np.int64)
    return np.ascontiguousarray(gens[order]), starts


@_njit
def _hit(gens, starts, exps, depth):
    for g in range(starts[depth], starts[depth + 1]):
        ok = True
        for j in range(depth + 1):
            if exps[j] < gens[g, j]:
                ok = False
                break
        if ok:
            return True
    return False


@_njit
def _walk(gens, starts, t):
    n = gens.shape[1]
    exps = np.zeros(n, dtype=np.int64)
    rem = np.zeros(n, dtype=np.int64)
    rem[0] = t
    exps[0] = -1
    depth = 0
    count = 0
    while depth >= 0:
        if depth == n - 1:
            exps[depth] = rem[depth]
            if not _hit(gens, starts, exps, depth):
                count += 1
            depth -= 1
            continue
        exps[depth] += 1
        if exps[depth] > rem[depth] or _hit(gens, starts, exps, depth):
            depth -= 1
            continue
        depth += 1
        rem[depth] = rem[depth - 1] - exps[depth - 1]
        exps[depth] = -1
    return count


def count_numba(gens: np.ndarray, t: int) -> int:
    if not NUMBA_AVAILABLE:
        raise ImportError("numba is not installed")
    k, n = gens.shape
    if k == 0:
        return comb(t + n - 1, n - 1)
    g, starts = _by_last_support(gens.astype(np.int64))
    return int(_walk(g, starts, np.int64(t)))


def count_walk_python(gens: np.ndarray, t: int) -> int:
    """The numba walk run as plain Python; used to test the kernel logic."""
    k, n = gens.shape
    if k == 0:
        return comb(t + n - 1, n - 1)
    g, starts = _by_last_support(gens.astype(np.int64))
    walk = getattr(_walk, "py_func", _walk)
    return int(walk(g, starts, t))


def compositions(t: int, n: int):
    """Yield chunks (arrays of shape (m, n)) of all weak compositions of t."""
    if n == 1:
        yield np.array([[t]], dtype=np.int64)
        return
    bars = combinations(range(t + n - 1), n - 1)
    while True:
        chunk = np.array(list(islice(bars, _CHUNK)), dtype=np.int64)
        if chunk.size == 0:
            return
        m = chunk.shape[0]
        padded = np.hstack([np.full((m, 1), -1), chunk, np.full((m, 1), t + n - 1)])
        yield np.diff(padded, axis=1) - 1


def count_numpy(gens: np.ndarray, t: int) -> int:
    k, n = gens.shape
    if k == 0:
        return comb(t + n - 1, n - 1)
    gens = gens.astype(np.int64)
    total = 0
    for block in compositions(t, n):
        divisible = (block[:, None, :] >= gens[None, :, :]).all(axis=2).any(axis=1)
        total += int(block.shape[0] - divisible.sum())
    return total


def use_numba() -> bool:
    return NUMBA_AVAILABLE and os.environ.get(DISABLE_ENV, "") not in ("1", "true", "yes")


def count(gens: np.ndarray, t: int) -> int:
    return count_numba(gens, t) if use_numba() else count_numpy(gens, t)
