"""Integer partitions, multisets and multiset coefficients."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cmp_to_key, lru_cache
from math import comb
from typing import Generic, Hashable, Iterable, Iterator, TypeVar

__all__ = [
    "Multiset",
    "Partition",
    "partitions",
    "cmp_partition",
    "multichoose",
]

T = TypeVar("T", bound=Hashable)


class Multiset(Generic[T]):
    """Immutable multiset: an underlying set plus a positive multiplicity map.

    Items are kept in first-seen order so iteration is deterministic.
    """

    __slots__ = ("_counts", "_hash")

    def __init__(self, items: Iterable[T] = ()) -> None:
        counts: dict[T, int] = {}
        for x in items:
            counts[x] = counts.get(x, 0) + 1
        self._counts = counts
        self._hash: int | None = None

    @classmethod
    def from_counts(cls, counts: dict[T, int]) -> Multiset[T]:
        if any(m < 1 for m in counts.values()):
            raise ValueError("multiplicities must be positive")
        ms = cls()
        ms._counts = dict(counts)
        return ms

    @property
    def underlying(self) -> tuple[T, ...]:
        return tuple(self._counts)

    def multiplicity(self, x: T) -> int:
        return self._counts.get(x, 0)

    def items(self) -> Iterator[tuple[T, int]]:
        return iter(self._counts.items())

    def elements(self) -> Iterator[T]:
        for x, m in self._counts.items():
            for _ in range(m):
                yield x

    def __len__(self) -> int:
        return sum(self._counts.values())

    def __contains__(self, x: object) -> bool:
        return x in self._counts

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multiset):
            return NotImplemented
        return Counter(self._counts) == Counter(other._counts)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._counts.items()))
        return self._hash

    def __repr__(self) -> str:
        inner = ", ".join(f"{x!r}: {m}" for x, m in self._counts.items())
        return f"Multiset({{{inner}}})"


@dataclass(frozen=True)
class Partition:
    """A partition of ``total`` in multiplicity form.

    ``parts`` holds ``(part, multiplicity)`` pairs by decreasing part. The
    partition of zero has no parts.
    """

    total: int
    parts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        parts = tuple(sorted(((p, m) for p, m in self.parts), reverse=True))
        object.__setattr__(self, "parts", parts)
        if any(p < 1 or m < 1 for p, m in parts):
            raise ValueError(f"parts and multiplicities must be positive: {parts}")
        if len({p for p, _ in parts}) != len(parts):
            raise ValueError("repeated part value; merge multiplicities")
        if sum(p * m for p, m in parts) != self.total:
            raise ValueError(f"parts {parts} do not sum to {self.total}")

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        counts = Counter(parts)
        return cls(sum(p * m for p, m in counts.items()), tuple(counts.items()))

    @property
    def underlying(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.parts)

    def multiplicity(self, part: int) -> int:
        for p, m in self.parts:
            if p == part:
                return m
        return 0

    def as_list(self) -> list[int]:
        """Parts in non-increasing order, repeated by multiplicity."""
        return [p for p, m in self.parts for _ in range(m)]

    def __str__(self) -> str:
        return "+".join(map(str, reversed(self.as_list()))) or "0"


def cmp_partition(p: Partition, q: Partition) -> int:
    """Compare greatest parts, then their multiplicities, then recurse.

    Returns -1, 0 or 1.
    """
    if p.total != q.total:
        raise ValueError(f"cannot compare partitions of {p.total} and {q.total}")
    for (a, ma), (b, mb) in zip(p.parts, q.parts):
        if a != b:
            return -1 if a < b else 1
        if ma != mb:
            return -1 if ma < mb else 1
    # equal totals and a tie on every compared pair force equal lengths
    return (len(p.parts) > len(q.parts)) - (len(p.parts) < len(q.parts))


def _raw_partitions(n: int, largest: int) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _raw_partitions(n - first, first):
            yield [first, *rest]


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[Partition, ...]:
    found = [Partition.from_parts(parts) for parts in _raw_partitions(n, n)]
    return tuple(sorted(found, key=cmp_to_key(cmp_partition)))


def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n``, ascending in the greatest-part order."""
    if n < 0:
        raise ValueError(f"cannot partition {n}")
    return _partitions(n)


def multichoose(n: int, k: int) -> int:
    """Number of size-``k`` multisets over ``n`` items, C(n+k-1, k)."""
    if n < 0 or k < 0:
        raise ValueError("multichoose needs non-negative arguments")
    if k == 0:
        return 1
    return comb(n + k - 1, k)
