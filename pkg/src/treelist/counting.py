"""Closed-form counts for backbone decorations and the symmetric/asymmetric tally arithmetic.

Positions are counted per half-backbone. A backbone of order ``n`` splits into
two halves of order ``n // 2`` (plus a middle vertex when ``n`` is odd); an
appendix of radius ``r`` may sit at distance ``r`` or more from the end vertex,
leaving ``n // 2 - r`` slots per half.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from math import comb
from typing import Iterable

from .combinatorics import Partition, multichoose, partitions

__all__ = [
    "SymCount",
    "G",
    "F",
    "count_equal_radius",
    "count_direct",
    "combine_cardinality",
    "combine_sigma",
    "sigma_of_H",
    "side_count",
    "middle_filter",
    "count_linear_total",
]


@dataclass(frozen=True)
class SymCount:
    """Tally of symmetric (``sigma``) and asymmetric (``alpha``) trees."""

    sigma: int
    alpha: int

    def __post_init__(self) -> None:
        if self.sigma < 0 or self.alpha < 0:
            raise ValueError(f"negative tally {self}")

    @property
    def total(self) -> int:
        return self.sigma + self.alpha


#: combining with this leaves any tally unchanged
UNIT = SymCount(1, 0)


@lru_cache(maxsize=None)
def G(k: int, n: int) -> int:
    """Ways to put ``k`` free vertices directly on a half-backbone with ``n`` slots.

    ``G(0, 0)`` is 0 by the recurrence's base case.
    """
    if k < 0 or n < 0:
        raise ValueError("G needs non-negative arguments")
    if k == 0:
        return 0 if n == 0 else 1
    return sum(G(k - 1, i) for i in range(n + 1))


def F(x: int, y: int, z: int) -> int:
    """Gluing count for ``x`` and ``y`` vertices on two halves with ``z`` slots each."""
    if x != y:
        return G(x, z) * G(y, z)
    g = G(x, z)
    return comb(g, 2) + g


def _placements(k: int, slots: int) -> int:
    # unlike G, an empty load always fits even with no slots
    return multichoose(slots, k)


def _glue(x: int, y: int, slots: int) -> int:
    if x != y:
        return _placements(x, slots) * _placements(y, slots)
    g = _placements(x, slots)
    return comb(g, 2) + g


def _slots(r: int, n: int) -> int:
    return max(0, (n - 2 * r) // 2)


def count_equal_radius(k: int, r: int, n: int) -> int:
    """Trees from ``k`` equal appendices of radius ``r`` on a backbone of order ``n``."""
    if n < 3 or k < 0 or r < 1:
        raise ValueError(f"invalid arguments k={k}, r={r}, n={n}")
    slots = _slots(r, n)
    middle_ok = n % 2 == 1 and r <= n // 2
    total = 0
    for j in range(k + 1 if middle_ok else 1):
        for i in range((k - j) // 2 + 1):
            total += _glue(k - j - i, i, slots)
    return total


def count_direct(k: int, n: int) -> int:
    """Trees from ``k`` leaves on a backbone of order ``n``, end vertices excluded."""
    return count_equal_radius(k, 1, n)


def combine_cardinality(s: SymCount, t: SymCount) -> int:
    return 2 * s.alpha * t.alpha + s.sigma * t.alpha + s.alpha * t.sigma + s.sigma * t.sigma


def combine_sigma(s: SymCount, t: SymCount) -> SymCount:
    sigma = s.sigma * t.sigma
    return SymCount(sigma, combine_cardinality(s, t) - sigma)


def side_count(k: int, r: int, n: int) -> SymCount:
    """Tally of ``k`` radius-``r`` appendices spread over the two sides only."""
    slots = _slots(r, n)
    total = sum(_glue(k - i, i, slots) for i in range(k // 2 + 1))
    sigma = _placements(k // 2, slots) if k % 2 == 0 else 0
    return SymCount(sigma, total - sigma)


def sigma_of_H(k: int, r: int, n: int) -> int:
    """Symmetric members among ``k`` radius-``r`` appendices on the sides."""
    if k < 1 or r < 1 or n < 1:
        raise ValueError(f"invalid arguments k={k}, r={r}, n={n}")
    if k % 2:
        return 0
    return G(k // 2, _slots(r, n))


def middle_filter(parts: Iterable[int], n: int) -> bool:
    """Whether every appendix radius in ``parts`` fits on the middle vertex."""
    return all(p <= n // 2 for p in parts)


def count_linear_total(k: int, n: int) -> int:
    """Trees from ``k`` free vertices grouped into linear appendices on a backbone of order ``n``."""
    if n < 3 or k < 0:
        raise ValueError(f"invalid arguments k={k}, n={n}")
    total = 0
    for j in range(k + 1 if n % 2 else 1):
        middles = sum(middle_filter(J.underlying, n) for J in partitions(j))
        if not middles:
            continue
        sides = sum(_fold_sides(Q, n).total for Q in partitions(k - j))
        total += middles * sides
    return total


def _fold_sides(Q: Partition, n: int) -> SymCount:
    layers = [side_count(m, q, n) for q, m in sorted(Q.parts)]
    return reduce(combine_sigma, layers, UNIT)
