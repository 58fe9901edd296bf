"""Exact univariate polynomials over Q, with binomial-basis helpers.

Coefficients are :class:`fractions.Fraction` throughout; nothing in this
module ever rounds.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from numbers import Rational as _RationalABC
from typing import Iterable, Optional, Sequence, Tuple, Union

Rational = Fraction
Scalar = Union[int, Fraction]
SignPattern = Tuple[int, ...]


class DegreeUndefined(ValueError):
    """Raised when a degree-dependent query is made on the zero polynomial."""


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, _RationalABC)) and not isinstance(c, bool):
        return Fraction(c)
    raise TypeError(f"exact scalar required, got {type(c).__name__}")


class Polynomial:
    """Dense polynomial; ``coeffs[i]`` is the coefficient of ``x**i``.

    Trailing zeros are trimmed on construction, so the zero polynomial has
    ``coeffs == ()`` and two equal polynomials have identical tuples.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, c: Scalar, power: int) -> "Polynomial":
        if power < 0:
            raise ValueError("negative power")
        return cls([0] * power + [c])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    # -- queries ------------------------------------------------------
    @property
    def degree(self) -> Optional[int]:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def require_degree(self) -> int:
        if not self.coeffs:
            raise DegreeUndefined("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def has_integer_coeffs(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other) -> "Polynomial":
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "Polynomial":
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            try:
                s = _as_fraction(other)
            except TypeError:
                return NotImplemented
            return Polynomial(s * c for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative exponent")
        out = Polynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x: Scalar) -> Fraction:
        return evaluate(self, x)

    # -- identity -----------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def _lift(v) -> Polynomial:
    if isinstance(v, Polynomial):
        return v
    try:
        return Polynomial([_as_fraction(v)])
    except TypeError:
        return NotImplemented


X = Polynomial.x()


def poly_arith(op: str, f: Polynomial, g) -> Polynomial:
    """Dispatch ``add``/``mul``/``scale``; ``scale`` requires a scalar ``g``."""
    if op == "add":
        return f + _lift_strict(g)
    if op == "mul":
        return f * _lift_strict(g)
    if op == "scale":
        if isinstance(g, Polynomial):
            raise TypeError("scale expects a scalar operand")
        return f * _as_fraction(g)
    raise ValueError(f"unknown operation {op!r}")


def _lift_strict(v) -> Polynomial:
    p = _lift(v)
    if p is NotImplemented:
        raise TypeError(f"cannot use {type(v).__name__} as a polynomial")
    return p


def evaluate(f: Polynomial, x: Scalar) -> Fraction:
    x = _as_fraction(x)
    acc = Fraction(0)
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def binomial_poly(shift: int, lower: int) -> Polynomial:
    """``C(x + shift, lower)`` as the polynomial prod_j (x+shift-j) / lower!."""
    if lower < 1:
        raise ValueError("lower index must be >= 1")
    return _binomial_poly(shift, lower)


@lru_cache(maxsize=4096)
def _binomial_poly(shift: int, lower: int) -> Polynomial:
    # integer falling factorial first, one exact division at the end
    cs = [1]
    for j in range(lower):
        r = shift - j
        cs = [r * cs[0]] + [cs[i - 1] + r * cs[i] for i in range(1, len(cs))] + [cs[-1]]
    k = factorial(lower)
    return Polynomial(Fraction(c, k) for c in cs)


def forward_differences(f: Polynomial) -> Tuple[Fraction, ...]:
    """Newton coefficients (Δ⁰f(0), ..., Δᵈf(0))."""
    if f.is_zero():
        return ()
    d = f.require_degree()
    row = [evaluate(f, i) for i in range(d + 1)]
    out = []
    while row:
        out.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return tuple(out)


def is_integer_valued(f: Polynomial) -> bool:
    return all(v.denominator == 1 for v in forward_differences(f))


def newton_to_poly(diffs: Sequence[Scalar], start: int = 0) -> Polynomial:
    """Inverse of :func:`forward_differences`, based at ``x = start``."""
    p = Polynomial(diffs[:1])
    for k, c in enumerate(diffs[1:], start=1):
        if c:
            p = p + binomial_poly(-start, k) * c
    return p


def sgn(v: Scalar) -> int:
    return (v > 0) - (v < 0)


def sign_pattern(f: Polynomial) -> SignPattern:
    d = f.require_degree()
    return tuple(sgn(c) for c in f.coeffs[:d])


def format_rational(c: Fraction) -> str:
    c = _as_fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(f: Polynomial) -> str:
    """Canonical text: descending powers, explicit signs, rationals as p/q.

    The output is accepted by :func:`hilbsign.parse.parse_poly`.
    """
    if f.is_zero():
        return "0"
    parts = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = format_rational(mag)
        else:
            var = "x" if i == 1 else f"x^{i}"
            body = var if mag == 1 else f"{format_rational(mag)}{var}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
