"""Macaulay parameters and the Hilbert-polynomial decision procedure.

An integer-valued polynomial f of degree d has a unique expansion

    f(x) = sum_{i=0}^{d} [ C(x+i, i+1) - C(x+i-m_i, i+1) ]

and f is a Hilbert polynomial exactly when m_0 >= m_1 >= ... >= m_d >= 0.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Tuple

from .intpoly import Polynomial, binomial_poly, is_integer_valued

MacaulayParams = Tuple[int, ...]


class NotIntegerValued(ValueError):
    pass


class InternalNonIntegerParameter(ArithmeticError):
    """A fractional parameter appeared; only possible through a bug."""


class NonPositiveCoefficient(ValueError):
    pass


def macaulay_term(i: int, m: int) -> Polynomial:
    """C(x+i, i+1) - C(x+i-m, i+1): degree i, leading coefficient m/i!."""
    if i < 0:
        raise ValueError("index must be non-negative")
    if m == 0:
        return Polynomial()
    return binomial_poly(i, i + 1) - binomial_poly(i - m, i + 1)


def macaulay_params(f: Polynomial) -> MacaulayParams:
    if not is_integer_valued(f):
        raise NotIntegerValued(f"{f} does not map integers to integers")
    if f.is_zero():
        return (0,)
    d = f.require_degree()
    params = [0] * (d + 1)
    rest = f
    # peel off the top-degree term; remainders may be fractional in between
    for i in range(d, -1, -1):
        m = rest.coeff(i) * factorial(i)
        if m.denominator != 1:
            raise InternalNonIntegerParameter(f"m_{i} = {m} for {f}")
        params[i] = int(m)
        rest = rest - macaulay_term(i, params[i])
    if not rest.is_zero():
        raise InternalNonIntegerParameter(f"nonzero remainder {rest} for {f}")
    return tuple(params)


def recompose(params: MacaulayParams) -> Polynomial:
    out = Polynomial()
    for i, m in enumerate(params):
        out = out + macaulay_term(i, m)
    return out


def params_admissible(params: MacaulayParams) -> bool:
    """m_0 >= m_1 >= ... >= m_d >= 0."""
    return params[-1] >= 0 and all(a >= b for a, b in zip(params, params[1:]))


def is_hilbert(f: Polynomial) -> bool:
    # The zero polynomial counts as Hilbert (Artinian quotients), M(0) = (0).
    if not is_integer_valued(f):
        return False
    return params_admissible(macaulay_params(f))


def classify_monomial(t: int, d: int) -> bool:
    """Whether t*x^d is a Hilbert polynomial, by the closed-form case split."""
    if t < 1:
        raise NonPositiveCoefficient(f"t must be >= 1, got {t}")
    if d < 0:
        raise ValueError("d must be non-negative")
    if d in (1, 2):
        return t >= 3
    return True


def leading_from_params(params: MacaulayParams) -> Fraction:
    return Fraction(params[-1], factorial(len(params) - 1))
