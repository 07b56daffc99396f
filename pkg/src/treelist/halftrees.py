"""Ordered listing of half-trees (rooted trees) and the orderings built on it.

Half-trees are listed order by order. A half-tree of order ``n`` found at step
``k`` is a rooted path of ``n - k`` vertices (the half-backbone) decorated with
appendices that use up the remaining ``k`` vertices. Positions on a
half-backbone of order ``s`` are distances ``0..s-1`` from the end vertex; the
root sits at distance ``s - 1``. An appendix of radius ``r`` (its height plus
one) may only hang from distance ``r`` or more, and when it hangs from exactly
``r`` it is *terminal* and must not exceed the tip it induces.

Everything below is indexed through one global :class:`Catalog`: the position
of a half-tree in the listing of all orders is its catalog index, and the
``index + 1``-th prime is its encoding ``nu``.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .combinatorics import Multiset, Partition, partitions
from .graphcore import HalfTree

__all__ = [
    "Catalog",
    "catalog",
    "FixedOrderMultiset",
    "AppendixSet",
    "Placement",
    "list_halftrees",
    "nu",
    "N",
    "cmp_fixed_order",
    "cmp_appendix_set",
    "enumerate_appendix_sets",
    "H_prime",
    "tip",
    "terminal_allowed",
    "cmp_halftree",
]

LEAF_CODE = b"()"

Slots = tuple[tuple[int, ...], ...]


class DuplicateEmission(RuntimeError):
    """The generator produced the same isomorphism class twice."""


def _prime(i: int) -> int:
    from sympy import sieve

    return int(sieve[i])


@dataclass(frozen=True)
class FixedOrderMultiset:
    """A multiset of half-trees of one order, held as catalog indices."""

    member_order: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", tuple(sorted(self.members)))
        cat = catalog()
        for m in self.members:
            if cat.orders[m] != self.member_order:
                raise ValueError(f"member {m} has order {cat.orders[m]}, expected {self.member_order}")

    @property
    def multiset(self) -> Multiset[int]:
        return Multiset(self.members)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class AppendixSet:
    """One choice of fixed-order multisets manifesting a partition."""

    source_partition: Partition
    per_part: tuple[FixedOrderMultiset, ...]  # by decreasing part

    def __post_init__(self) -> None:
        parts = self.source_partition.parts
        if len(parts) != len(self.per_part):
            raise ValueError("one fixed-order multiset per distinct part is required")
        for (p, m), fm in zip(parts, self.per_part):
            if fm.member_order != p or len(fm) != m:
                raise ValueError(f"part {p}x{m} manifested by {fm}")

    def elements(self) -> list[tuple[int, int]]:
        """``(catalog index, multiplicity)`` pairs by ascending index."""
        counts: dict[int, int] = {}
        for fm in self.per_part:
            for h in fm.members:
                counts[h] = counts.get(h, 0) + 1
        return sorted(counts.items())


@dataclass(frozen=True)
class Placement:
    """Appendices hung on a half-backbone.

    ``slots[d]`` holds the sorted catalog indices of the appendices attached
    at distance ``d`` from the end vertex.
    """

    backbone_order: int
    slots: Slots

    def __post_init__(self) -> None:
        if len(self.slots) != self.backbone_order:
            raise ValueError("one slot per backbone vertex is required")
        radii = catalog().radii
        for d, hosted in enumerate(self.slots):
            for a in hosted:
                if radii[a] > d:
                    raise ValueError(f"appendix of radius {radii[a]} at distance {d}")

    @classmethod
    def bare(cls, backbone_order: int) -> Placement:
        return cls(backbone_order, ((),) * backbone_order)

    def overlay(self, other: Placement) -> Placement:
        if other.backbone_order != self.backbone_order:
            raise ValueError("placements on different half-backbones")
        return Placement(self.backbone_order, _merge(self.slots, other.slots))

    def slot(self, d: int) -> Multiset[int]:
        return Multiset(self.slots[d])

    @property
    def height(self) -> int:
        return self.backbone_order - 1


def _merge(a: Slots, b: Slots) -> Slots:
    return tuple(tuple(sorted(x + y)) if y else x for x, y in zip(a, b))


def _spread(a: int, distances: Sequence[int], s: int) -> Slots:
    slots: list[tuple[int, ...]] = [()] * s
    for d in distances:
        slots[d] = slots[d] + (a,)
    return tuple(slots)


class Catalog:
    """All half-trees of orders ``1..complete_order`` in listing order.

    Orders are built strictly bottom-up; an order is immutable once complete.
    """

    def __init__(self) -> None:
        self.trees: list[HalfTree] = []
        self.codes: list[bytes] = []
        self.orders: list[int] = []
        self.radii: list[int] = []
        self.steps: list[int] = []
        self.index: dict[bytes, int] = {}
        self._starts: list[int] = [0, 0]  # _starts[n] = first index of order n
        self._hprime: dict[tuple[int, int, int], list[tuple[int, ...]]] = {}
        self._sets: dict[tuple[int, int], list[tuple[int, ...]]] = {}
        self._lock = threading.RLock()

    @property
    def complete_order(self) -> int:
        return len(self._starts) - 2

    def ensure(self, n: int) -> None:
        with self._lock:
            while self.complete_order < n:
                self._build(self.complete_order + 1)

    def ids_of_order(self, n: int) -> range:
        self.ensure(n)
        return range(self._starts[n], self._starts[n + 1])

    def of_order(self, n: int) -> tuple[HalfTree, ...]:
        return tuple(self.trees[i] for i in self.ids_of_order(n))

    def index_of(self, h: HalfTree) -> int:
        self.ensure(h.order)
        return self.index[h.code]

    # ordering ----------------------------------------------------------

    def le(self, a: int, code: bytes, order: int) -> bool:
        """Whether catalog entry ``a`` is listed no later than the half-tree ``code``."""
        if self.orders[a] != order:
            return self.orders[a] < order
        return a <= self.index[code]

    # placements --------------------------------------------------------

    def walk(self, slots: Slots, upto: int | None = None) -> tuple[list[bytes], list[int]]:
        """Codes and orders of the subtrees hanging from each backbone vertex."""
        stop = len(slots) if upto is None else upto
        codes = [LEAF_CODE]
        sizes = [1]
        for d in range(1, stop):
            hosted = slots[d]
            if hosted:
                parts = sorted([codes[-1], *(self.codes[a] for a in hosted)])
                codes.append(b"(" + b"".join(parts) + b")")
                sizes.append(sizes[-1] + 1 + sum(self.orders[a] for a in hosted))
            else:
                codes.append(b"(" + codes[-1] + b")")
                sizes.append(sizes[-1] + 1)
        return codes, sizes

    def terminals_ok(self, slots: Slots, elements: Sequence[int] | None = None) -> bool:
        """Check every terminal appendix against its tip.

        With ``elements`` only terminals of those catalog entries are checked.
        """
        radii = self.radii
        if elements is None:
            checks = [(d, a) for d in range(1, len(slots)) for a in set(slots[d]) if radii[a] == d]
        else:
            checks = [(radii[a], a) for a in elements if radii[a] < len(slots) and a in slots[radii[a]]]
        if not checks:
            return True
        codes, sizes = self.walk(slots, max(d for d, _ in checks))
        return all(self.le(a, codes[d - 1], sizes[d - 1]) for d, a in checks)

    def h_prime_distances(self, count: int, a: int, s: int) -> list[tuple[int, ...]]:
        """Sorted distance tuples for ``count`` copies of ``a`` on a half-backbone of order ``s``."""
        key = (count, a, s)
        cached = self._hprime.get(key)
        if cached is None:
            cached = list(itertools.combinations_with_replacement(range(self.radii[a], s), count))
            self._hprime[key] = cached
        return cached

    def h_prime_slots(self, count: int, a: int, s: int) -> list[Slots]:
        return [_spread(a, dist, s) for dist in self.h_prime_distances(count, a, s)]

    def realize(self, slots: Slots) -> HalfTree:
        """Explicit half-tree: backbone root first, then appendices root-side first."""
        s = len(slots)
        children: list[list[int]] = [[i + 1] if i + 1 < s else [] for i in range(s)]
        for i in range(s):
            for a in slots[s - 1 - i]:
                offset = len(children)
                children[i].append(offset)
                children.extend([c + offset for c in kids] for kids in self.trees[a].children)
        return HalfTree(len(children), 0, tuple(tuple(c) for c in children))

    def positional_key(self, slots: Slots, elements: Sequence[int]) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(d for d, hosted in enumerate(slots) for x in hosted if x == a) for a in elements)

    # appendix sets -----------------------------------------------------

    def fixed_order_multisets(self, part: int, size: int) -> list[tuple[int, ...]]:
        """Size-``size`` multisets of half-trees of order ``part``, ascending by ``N``."""
        key = (part, size)
        cached = self._sets.get(key)
        if cached is None:
            ids = self.ids_of_order(part)
            combos = list(itertools.combinations_with_replacement(ids, size))
            combos.sort(key=_encode)
            cached = self._sets[key] = combos
        return cached

    def appendix_sets(self, p: Partition) -> Iterator[AppendixSet]:
        choices = [self.fixed_order_multisets(part, m) for part, m in p.parts]
        for combo in itertools.product(*choices):
            per_part = tuple(FixedOrderMultiset(part, members) for (part, _), members in zip(p.parts, combo))
            yield AppendixSet(p, per_part)

    # building ----------------------------------------------------------

    def _register(self, slots: Slots, code: bytes, step: int) -> None:
        if code in self.index:
            raise DuplicateEmission(f"half-tree {code!r} emitted twice")
        h = self.realize(slots) if slots else HalfTree(1, 0, ((),))
        self.index[code] = len(self.trees)
        self.trees.append(h)
        self.codes.append(code)
        self.orders.append(h.order)
        self.radii.append(h.height + 1)
        self.steps.append(step)

    def _build(self, n: int) -> None:
        if n == 1:
            self._register((), LEAF_CODE, 0)
            self._starts.append(len(self.trees))
            return
        for k in range(n - 1):
            s = n - k
            for p in partitions(k):
                for aset in self.appendix_sets(p):
                    for slots in self.decorate(aset, s):
                        self._register(slots, self.walk(slots)[0][-1], k)
        self._starts.append(len(self.trees))

    def decorate(self, aset: AppendixSet, s: int) -> list[Slots]:
        """All valid placements of an appendix set on a half-backbone, in positional order."""
        elements = aset.elements()
        layers = sorted(elements, key=lambda am: (self.radii[am[0]], am[0]))
        states: list[Slots] = [((),) * s]
        for a, m in layers:
            options = self.h_prime_slots(m, a, s)
            states = [
                merged
                for st in states
                for opt in options
                if self.terminals_ok(merged := _merge(st, opt), (a,))
            ]
            if not states:
                return []
        ids = [a for a, _ in elements]
        states.sort(key=lambda st: self.positional_key(st, ids))
        return states


def _encode(members: Sequence[int]) -> int:
    value = 1
    for m in members:
        value *= _prime(m + 1)
    return value


_CATALOG = Catalog()


def catalog() -> Catalog:
    """The process-wide half-tree catalog."""
    return _CATALOG


def list_halftrees(n: int) -> tuple[HalfTree, ...]:
    if n < 1:
        raise ValueError(f"invalid order {n}")
    return _CATALOG.of_order(n)


def nu(h: HalfTree) -> int:
    """Prime assigned to ``h`` by its position in the listing of all orders."""
    return _prime(_CATALOG.index_of(h) + 1)


def N(m: FixedOrderMultiset) -> int:
    return _encode(m.members)


def cmp_fixed_order(m1: FixedOrderMultiset, m2: FixedOrderMultiset) -> int:
    if m1.member_order != m2.member_order:
        raise ValueError("multisets of different member orders")
    if len(m1) != len(m2):
        raise ValueError("multisets of different sizes")
    a, b = N(m1), N(m2)
    return (a > b) - (a < b)


def cmp_appendix_set(A: AppendixSet, B: AppendixSet) -> int:
    if A.source_partition != B.source_partition:
        raise ValueError("appendix sets from different partitions")
    for x, y in zip(A.per_part, B.per_part):
        c = cmp_fixed_order(x, y)
        if c:
            return c
    return 0


def enumerate_appendix_sets(p: Partition, listing: Mapping[int, Sequence[HalfTree]]) -> list[AppendixSet]:
    """Appendix sets drawn from ``listing[part]`` for each part, ascending."""
    for part, _ in p.parts:
        if part not in listing:
            raise KeyError(f"no half-trees of order {part} available")
    choices = []
    for part, m in p.parts:
        ids = sorted(_CATALOG.index_of(h) for h in listing[part])
        combos = sorted(itertools.combinations_with_replacement(ids, m), key=_encode)
        choices.append([FixedOrderMultiset(part, c) for c in combos])
    return [AppendixSet(p, combo) for combo in itertools.product(*choices)]


def H_prime(count: int, a: HalfTree, backbone_order: int) -> list[HalfTree]:
    """Every way to hang ``count`` copies of ``a`` on a half-backbone, terminals allowed."""
    ai = _CATALOG.index_of(a)
    return [_CATALOG.realize(sl) for sl in _CATALOG.h_prime_slots(count, ai, backbone_order)]


def tip(pl: Placement, at: int) -> HalfTree:
    """The half-tree cut off on the end side of a terminal appendix at distance ``at``."""
    radii = _CATALOG.radii
    if not 1 <= at < pl.backbone_order or not any(radii[a] == at for a in pl.slots[at]):
        raise ValueError(f"no terminal appendix at distance {at}")
    return _CATALOG.realize(pl.slots[:at])


def cmp_halftree(a: HalfTree, b: HalfTree) -> int:
    ia, ib = _CATALOG.index_of(a), _CATALOG.index_of(b)
    return (ia > ib) - (ia < ib)


def terminal_allowed(a: HalfTree, t: HalfTree) -> bool:
    return cmp_halftree(a, t) <= 0


def halftree_step(h: HalfTree) -> int:
    """Step at which the listing emits ``h``: order minus height minus one."""
    return _CATALOG.steps[_CATALOG.index_of(h)]


def rank_count(n: int) -> int:
    """Number of half-trees of order ``n``, without realizing anything new."""
    return len(_CATALOG.ids_of_order(n))
