"""Leading-coefficient thresholds, sign-pattern realization and certificates.

For integers a_0..a_{d-1} with N = min(a), every

    n*x^d + a_{d-1}*x^{d-1} + ... + a_0

is a Hilbert polynomial once n >= 5d+3 (N >= -2) or n >= -10d*floor(N/5)+3
(N < -2).  The certificates below replay the constructive argument: every
leaf is checked with :func:`is_hilbert`, and the tree only combines leaves
by sums, products and positive integer multiples, all of which preserve
Hilbertness.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple, Union

from .intpoly import Polynomial
from .macaulay import is_hilbert


class EmptyPattern(ValueError):
    pass


class BoundViolated(ValueError):
    pass


@dataclass(frozen=True)
class LowerCoefficients:
    """The non-leading coefficients a_0, ..., a_{d-1} (a_0 first)."""

    a: Tuple[int, ...]

    def __post_init__(self):
        if not self.a:
            raise ValueError("need at least one lower coefficient (d >= 1)")
        for v in self.a:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"coefficients must be integers, got {v!r}")

    @classmethod
    def of(cls, a: Union["LowerCoefficients", Sequence[int]]) -> "LowerCoefficients":
        return a if isinstance(a, cls) else cls(tuple(a))

    @property
    def d(self) -> int:
        return len(self.a)

    @property
    def min(self) -> int:
        return min(self.a)

    def with_leading(self, n: int) -> Polynomial:
        return Polynomial(list(self.a) + [n])


LowerLike = Union[LowerCoefficients, Sequence[int]]


def leading_bound(lower: LowerLike) -> int:
    low = LowerCoefficients.of(lower)
    d, N = low.d, low.min
    if N >= -2:
        return 5 * d + 3
    # floor division is a true floor for negative N: -7 // 5 == -2
    return -10 * d * (N // 5) + 3


def realize_signs(s: Sequence[int]) -> Polynomial:
    """(5d+3)x^d + sum s_i x^i, which has sign pattern ``s``."""
    s = tuple(s)
    if not s:
        raise EmptyPattern("sign pattern must have length >= 1")
    if any(v not in (-1, 0, 1) for v in s):
        raise ValueError(f"sign entries must be -1, 0 or 1: {s}")
    return Polynomial(list(s) + [5 * len(s) + 3])


def minimal_leading(lower: LowerLike) -> int:
    low = LowerCoefficients.of(lower)
    bound = leading_bound(low)
    for n in range(1, bound + 1):
        if is_hilbert(low.with_leading(n)):
            return n
    raise AssertionError(f"threshold {bound} failed for {low.a}")  # unreachable


# -- certificates ------------------------------------------------------


class Tag(str, enum.Enum):
    MONOMIAL = "monomial-proposition"
    BASE_2X_PLUS_1 = "base-fact-2x+1"
    BASE_5X_MINUS_5 = "base-fact-5x-5"
    PRODUCT = "product-of-atoms"
    CONSTANT = "constant"


@dataclass(frozen=True)
class Atom:
    poly: Polynomial
    tag: Tag


@dataclass(frozen=True)
class Sum:
    children: Tuple["Node", ...]


@dataclass(frozen=True)
class Product:
    children: Tuple["Node", ...]


@dataclass(frozen=True)
class Scale:
    factor: int
    child: "Node"


Node = Union[Atom, Sum, Product, Scale]


def node_value(node: Node) -> Polynomial:
    if isinstance(node, Atom):
        return node.poly
    if isinstance(node, Sum):
        out = Polynomial()
        for c in node.children:
            out = out + node_value(c)
        return out
    if isinstance(node, Product):
        out = Polynomial([1])
        for c in node.children:
            out = out * node_value(c)
        return out
    if isinstance(node, Scale):
        return node_value(node.child) * node.factor
    raise TypeError(f"not a certificate node: {node!r}")


def iter_leaves(node: Node) -> Iterator[Atom]:
    if isinstance(node, Atom):
        yield node
    elif isinstance(node, (Sum, Product)):
        for c in node.children:
            yield from iter_leaves(c)
    elif isinstance(node, Scale):
        yield from iter_leaves(node.child)
    else:
        raise TypeError(f"not a certificate node: {node!r}")


@dataclass(frozen=True)
class Certificate:
    """A sum of top-level terms, each a sum/product/scale tree of atoms."""

    terms: Tuple[Node, ...]

    @property
    def root(self) -> Sum:
        return Sum(self.terms)

    def summands(self) -> Tuple[Polynomial, ...]:
        return tuple(node_value(t) for t in self.terms)

    def leaves(self) -> Tuple[Atom, ...]:
        return tuple(iter_leaves(self.root))

    def value(self) -> Polynomial:
        return node_value(self.root)

    def replace_leaf(self, index: int, poly: Polynomial) -> "Certificate":
        """Copy with the ``index``-th leaf (depth-first) swapped for ``poly``."""
        counter = [index]

        def walk(node):
            if isinstance(node, Atom):
                hit = counter[0] == 0
                counter[0] -= 1
                return Atom(poly, node.tag) if hit else node
            if isinstance(node, Sum):
                return Sum(tuple(walk(c) for c in node.children))
            if isinstance(node, Product):
                return Product(tuple(walk(c) for c in node.children))
            return Scale(node.factor, walk(node.child))

        new_terms = tuple(walk(t) for t in self.terms)
        if counter[0] >= 0:
            raise IndexError(f"certificate has no leaf {index}")
        return Certificate(new_terms)


def _monomial_atom(c: int, i: int) -> Atom:
    tag = Tag.CONSTANT if i == 0 else Tag.MONOMIAL
    return Atom(Polynomial.monomial(c, i), tag)


def base_product(d: int) -> Node:
    """(5x-5)(d x^{d-1} + ... + 2x + 1) = 5(d x^d - x^{d-1} - ... - 1).

    The second factor is regrouped as (2x+1) + 3x^2 + ... + d x^{d-1} so that
    every leaf is itself a known Hilbert polynomial.
    """
    five = Atom(Polynomial([-5, 5]), Tag.BASE_5X_MINUS_5)
    if d == 1:
        return five
    factor = [Atom(Polynomial([1, 2]), Tag.BASE_2X_PLUS_1)]
    factor += [_monomial_atom(k + 1, k) for k in range(2, d)]
    second = factor[0] if len(factor) == 1 else Sum(tuple(factor))
    return Product((five, second))


def build_certificate(lower: LowerLike, n: int) -> Certificate:
    low = LowerCoefficients.of(lower)
    bound = leading_bound(low)
    if n < bound:
        raise BoundViolated(f"n = {n} is below the threshold {bound}")
    d, N = low.d, low.min
    if N >= -2:
        shift, base = 5, base_product(d)
    else:
        M = -(N // 5)
        shift, base = 10 * M, Scale(2 * M, base_product(d))
    terms = [base]
    terms += [_monomial_atom(a + shift, i) for i, a in enumerate(low.a)]
    terms.append(_monomial_atom(n - shift * d, d))
    return Certificate(tuple(terms))


def verify_certificate(cert: Certificate, target: Polynomial) -> bool:
    def scales_ok(node) -> bool:
        if isinstance(node, Scale):
            return node.factor >= 1 and scales_ok(node.child)
        if isinstance(node, (Sum, Product)):
            return bool(node.children) and all(scales_ok(c) for c in node.children)
        return True

    try:
        if not scales_ok(cert.root) or not cert.terms:
            return False
        if not all(is_hilbert(a.poly) for a in cert.leaves()):
            return False
        return cert.value() == target
    except TypeError:
        return False
