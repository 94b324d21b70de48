"""Exact integer primitives for the dimension bounds.

Everything in this module is plain Python integer arithmetic: the closed-form
genus bound ``dmax``, the half-product ``F``, the domination partial order on
(dimension, genus) pairs, negligibility, and the classical codimension bound.
No floating point is used anywhere; all values are exact for arbitrarily large
inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

__all__ = [
    "Pair",
    "GenusValue",
    "BoundKind",
    "dmax",
    "dmax_piecewise",
    "half_product",
    "dominates",
    "strictly_dominates",
    "is_negligible",
    "keel_sadun_bound",
]

BoundKind = Literal["exact", "lower-bound", "upper-bound"]

_BOUND_KINDS = ("exact", "lower-bound", "upper-bound")


@dataclass(frozen=True, order=True)
class Pair:
    """A (d, g) pair: d the complex dimension of a compact subvariety
    candidate, g the dimension of the ambient abelian varieties.

    Ordered lexicographically for deterministic output; the *domination*
    partial order is a separate relation, see :func:`dominates`.
    """

    d: int
    g: int

    def __post_init__(self) -> None:
        if self.d < 0:
            raise ValueError(f"pair dimension must be >= 0 (got d={self.d})")
        if self.g < 1:
            raise ValueError(f"pair genus must be >= 1 (got g={self.g})")


@dataclass(frozen=True)
class GenusValue:
    """A per-genus table value together with its bound kind."""

    g: int
    value: int
    kind: BoundKind = "exact"

    def __post_init__(self) -> None:
        if self.g < 0:
            raise ValueError(f"genus must be >= 0 (got {self.g})")
        if self.kind not in _BOUND_KINDS:
            raise ValueError(f"kind must be one of {_BOUND_KINDS} (got {self.kind!r})")

    def render(self) -> str:
        prefix = {"exact": "", "lower-bound": ">=", "upper-bound": "<="}[self.kind]
        return f"{prefix}{self.value}"


def dmax(g: int) -> int:
    """max(g-1, floor(floor(g/2)^2 / 4)), the maximal dimension of a compact
    subvariety of the genus-g moduli space.

    Defined for g >= 1; the g = 0 base case belongs to the moduli recursion,
    not to this function.
    """
    if g < 1:
        raise ValueError(f"dmax is defined for g >= 1 (got g={g})")
    half = g // 2
    return max(g - 1, (half * half) // 4)


def dmax_piecewise(g: int) -> int:
    """Three-branch form of :func:`dmax`; kept separate so the equivalence of
    the two expressions can be checked rather than assumed."""
    if g < 1:
        raise ValueError(f"dmax is defined for g >= 1 (got g={g})")
    if g < 16:
        return g - 1
    if g % 2 == 0:
        return (g * g) // 16
    return ((g - 1) * (g - 1)) // 16


def half_product(n: int) -> int:
    """F(n) = ceil(n/2) * floor(n/2), the dimension of the optimal unitary
    factor on n letters.  Satisfies (n^2 - 1)/4 <= F(n) <= n^2/4."""
    if n < 2:
        raise ValueError(f"half_product is defined for n >= 2 (got n={n})")
    return ((n + 1) // 2) * (n // 2)


def dominates(p: Pair, q: Pair) -> bool:
    """True iff q is dominated by p: q.d <= p.d and q.g >= p.g.

    A dominating pair is at least as large a compact subvariety in an ambient
    moduli space of at most the same genus.
    """
    return q.d <= p.d and q.g >= p.g


def strictly_dominates(p: Pair, q: Pair) -> bool:
    """Domination with q.d < p.d."""
    return dominates(p, q) and q.d < p.d


def is_negligible(p: Pair) -> bool:
    """True iff d < g - 1: such a pair is beaten by a complete intersection
    through a very general point."""
    return p.d < p.g - 1


def keel_sadun_bound(g: int) -> int:
    """Classical upper bound g(g-1)/2 - 1 for the dimension of a compact
    subvariety of the genus-g moduli space; valid for g >= 3."""
    if g < 3:
        raise ValueError(f"keel_sadun_bound is stated for g >= 3 (got g={g})")
    return g * (g - 1) // 2 - 1
