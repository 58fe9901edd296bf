"""Hilbert functions of monomial quotients by direct enumeration."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import numpy as np

from ..intpoly import Polynomial, evaluate, newton_to_poly
from ..macaulay import MacaulayParams, is_hilbert, macaulay_params
from . import _kernels

Exponents = Tuple[int, ...]


class StabilizationNotDetected(ValueError):
    """The table is too short to pin down the eventual polynomial."""


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize(gens: Iterable[Exponents]) -> Tuple[Exponents, ...]:
    uniq = sorted(set(gens), key=lambda g: (sum(g), g))
    kept = []
    for g in uniq:
        if not any(_divides(h, g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal of k[x_1..x_n] generated by monomials, kept as a minimal antichain."""

    n_vars: int
    generators: Tuple[Exponents, ...] = ()

    def __post_init__(self):
        if self.n_vars < 1:
            raise ValueError("n_vars must be positive")
        gens = []
        for g in self.generators:
            g = tuple(int(e) for e in g)
            if len(g) != self.n_vars:
                raise ValueError(f"generator {g} has wrong length for {self.n_vars} variables")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in {g}")
            if not any(g):
                raise ValueError("the constant monomial 1 would give the unit ideal")
            gens.append(g)
        object.__setattr__(self, "generators", minimalize(gens))

    def as_array(self) -> np.ndarray:
        if not self.generators:
            return np.zeros((0, self.n_vars), dtype=np.int64)
        return np.array(self.generators, dtype=np.int64)

    def add(self, gen: Exponents) -> "MonomialIdeal":
        return MonomialIdeal(self.n_vars, self.generators + (tuple(gen),))


def count_monomials(ideal: MonomialIdeal, t: int) -> int:
    """Number of degree-t monomials divisible by no generator."""
    if t < 0:
        raise ValueError("degree must be non-negative")
    return _kernels.count(ideal.as_array(), t)


def hilbert_table(ideal: MonomialIdeal, t_max: int) -> Tuple[int, ...]:
    gens = ideal.as_array()
    return tuple(_kernels.count(gens, t) for t in range(t_max + 1))


def _fits_degree(tail: Sequence[int], d: int) -> bool:
    row = list(tail)
    for _ in range(d + 1):
        row = [b - a for a, b in zip(row, row[1:])]
    return all(v == 0 for v in row)


def interpolate_eventual(table: Sequence[int]) -> Tuple[Polynomial, int]:
    """Eventual polynomial of a Hilbert table and its stabilization index.

    Takes the smallest d whose last d+3 entries lie on one degree-d
    polynomial (d+2 to fix it, one to confirm), then walks backwards to the
    first index from which the table agrees with it.
    """
    L = len(table)
    for d in range(0, L - 2):
        start = L - (d + 3)
        if not _fits_degree(table[start:], d):
            continue
        diffs = []
        row = list(table[start:start + d + 1])
        while row:
            diffs.append(row[0])
            row = [b - a for a, b in zip(row, row[1:])]
        p = newton_to_poly(diffs, start)
        stab = start
        while stab > 0 and evaluate(p, stab - 1) == table[stab - 1]:
            stab -= 1
        return p, stab
    raise StabilizationNotDetected(
        f"no eventual polynomial detected in {L} values; raise t_max")


@dataclass(frozen=True)
class CrossCheck:
    table: Tuple[int, ...]
    polynomial: Polynomial
    params: MacaulayParams
    stabilization: int
    verdict: bool


def cross_check(ideal: MonomialIdeal, t_max: int) -> CrossCheck:
    """Oracle polynomial of ``ideal`` run through the Macaulay decision.

    ``verdict`` is False only if the decision procedure rejects a polynomial
    that an actual quotient algebra realizes, i.e. on a bug.
    """
    table = hilbert_table(ideal, t_max)
    poly, stab = interpolate_eventual(table)
    return CrossCheck(table, poly, macaulay_params(poly), stab, is_hilbert(poly))
