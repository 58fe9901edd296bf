"""Text formats: polynomial expressions, sign patterns, monomial generators.

Polynomial grammar (whitespace is insignificant)::

    expr  := ['-'] term (('+' | '-') term)*
    term  := coeff? ('*'? 'x' ('^' uint)?)?      # non-empty
    coeff := int | int '/' uint
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

from .intpoly import Polynomial


class PolySyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.offset = len(text[:pos].encode("utf-8"))
        self.text = text
        super().__init__(f"{message} at byte {self.offset}")


class ZeroDenominator(PolySyntaxError):
    pass


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            raise self.error("expected digits")
        return int(self.text[start:self.pos])

    def error(self, message: str) -> PolySyntaxError:
        return PolySyntaxError(message, self.text, self.pos)


def _term(cur: _Cursor) -> Tuple[Fraction, int]:
    coeff = None
    if cur.peek().isdigit():
        num = cur.uint()
        if cur.peek() == "/":
            cur.take()
            at = cur.pos
            den = cur.uint()
            if den == 0:
                raise ZeroDenominator("zero denominator", cur.text, at)
            coeff = Fraction(num, den)
        else:
            coeff = Fraction(num)
    power = 0
    star = cur.peek() == "*"
    if star:
        if coeff is None:
            raise cur.error("'*' without a coefficient")
        cur.take()
    if cur.peek() == "x":
        cur.take()
        power = 1
        if cur.peek() == "^":
            cur.take()
            power = cur.uint()
    elif star:
        raise cur.error("expected 'x' after '*'")
    elif coeff is None:
        raise cur.error("expected a term")
    return (Fraction(1) if coeff is None else coeff), power


def parse_poly(text: str) -> Polynomial:
    """Parse an expression such as ``"5*x^3 - 2*x + 1"``; like powers merge."""
    cur = _Cursor(text)
    coeffs: List[Fraction] = []

    def put(c: Fraction, p: int) -> None:
        if p >= len(coeffs):
            coeffs.extend([Fraction(0)] * (p + 1 - len(coeffs)))
        coeffs[p] += c

    sign = 1
    if cur.peek() == "-":
        cur.take()
        sign = -1
    c, p = _term(cur)
    put(sign * c, p)
    while cur.peek():
        op = cur.take()
        if op not in "+-":
            cur.pos -= 1
            raise cur.error(f"unexpected {op!r}")
        c, p = _term(cur)
        put(c if op == "+" else -c, p)
    return Polynomial(coeffs)


def parse_int_list(text: str) -> Tuple[int, ...]:
    """``"-1, 0,1"`` -> ``(-1, 0, 1)``."""
    parts = [s.strip() for s in text.split(",")]
    if not parts or any(not s for s in parts):
        raise ValueError(f"expected comma-separated integers, got {text!r}")
    try:
        return tuple(int(s) for s in parts)
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None


def parse_generators(text: str, n_vars: int) -> Tuple[Tuple[int, ...], ...]:
    """``"x1^2, x1*x2"`` -> exponent vectors over variables x1..x{n_vars}."""
    if not text.strip():
        return ()
    gens = []
    for chunk in text.split(","):
        exps = [0] * n_vars
        chunk = chunk.strip()
        if not chunk:
            raise ValueError(f"empty generator in {text!r}")
        for factor in chunk.split("*"):
            factor = factor.strip()
            base, _, power = factor.partition("^")
            base = base.strip()
            if not (base.startswith("x") and base[1:].isdigit()):
                raise ValueError(f"bad variable {factor!r}; use x1..x{n_vars}")
            idx = int(base[1:])
            if not 1 <= idx <= n_vars:
                raise ValueError(f"variable {base} out of range 1..{n_vars}")
            power = power.strip()
            if power and not power.isdigit():
                raise ValueError(f"bad exponent in {factor!r}")
            exps[idx - 1] += int(power) if power else 1
        gens.append(tuple(exps))
    return tuple(gens)
