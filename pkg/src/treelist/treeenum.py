"""Diameter-stratified listing of all unlabeled trees of a given order.

At step ``k`` the backbone is the path on ``m = n - k`` vertices and ``k`` free
vertices are hung from it as appendices. An even backbone splits at its central
edge into two halves of order ``m / 2``; an odd one into two halves of order
``(m - 1) / 2`` around a middle vertex. Each half is decorated like a
half-tree, the halves are fused, and decorations of different appendices are
combined layer by layer in ascending radius.

A decorated backbone is held as a pair of :class:`Placement` objects plus the
appendices on the middle vertex. The pair is unordered: ``symmetric`` marks the
pairs whose halves carry identical placements, and combining two asymmetric
pairs yields both relative orientations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .combinatorics import Partition, partitions
from .counting import SymCount
from .graphcore import HalfTree, Tree, canonical_free, center, diameter, is_symmetric, rooted_path
from .halftrees import AppendixSet, FixedOrderMultiset, Placement, _merge, catalog

__all__ = [
    "DecoratedBackbone",
    "GeneratedSet",
    "CombineRecord",
    "TreeEnumerator",
    "list_trees",
    "iter_trees",
    "fuse",
    "combine",
    "attach_middle",
    "step_of",
    "mirror_symmetric",
    "equal_radius_set",
    "linear_step",
]


@dataclass(frozen=True)
class DecoratedBackbone:
    """A backbone with decorated halves and, for odd backbones, a middle load.

    ``middle`` holds sorted catalog indices and is ``None`` on even backbones.
    """

    backbone_order: int
    left: Placement
    right: Placement
    middle: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        half = self.backbone_order // 2
        if self.left.backbone_order != half or self.right.backbone_order != half:
            raise ValueError(f"halves of a backbone of order {self.backbone_order} must have order {half}")
        if (self.middle is not None) != (self.backbone_order % 2 == 1):
            raise ValueError("a middle load exists exactly on odd backbones")
        if self.middle:
            radii = catalog().radii
            if max(radii[c] for c in self.middle) > half:
                raise ValueError("middle appendix longer than the half-backbone")

    @property
    def symmetric(self) -> bool:
        return self.left.slots == self.right.slots

    @property
    def left_half(self) -> HalfTree:
        return catalog().realize(self.left.slots)

    @property
    def right_half(self) -> HalfTree:
        return catalog().realize(self.right.slots)

    def mirrored(self) -> DecoratedBackbone:
        return DecoratedBackbone(self.backbone_order, self.right, self.left, self.middle)

    def overlay(self, other: DecoratedBackbone) -> DecoratedBackbone:
        if other.backbone_order != self.backbone_order:
            raise ValueError("decorations of different backbones")
        middle = None
        if self.middle is not None:
            middle = tuple(sorted(self.middle + other.middle))
        return DecoratedBackbone(
            self.backbone_order,
            Placement(self.left.backbone_order, _merge(self.left.slots, other.left.slots)),
            Placement(self.right.backbone_order, _merge(self.right.slots, other.right.slots)),
            middle,
        )

    def valid(self) -> bool:
        """Terminal appendices do not exceed their tips, on both halves and the middle."""
        cat = catalog()
        if not (cat.terminals_ok(self.left.slots) and cat.terminals_ok(self.right.slots)):
            return False
        half = self.backbone_order // 2
        tall = [c for c in self.middle or () if cat.radii[c] == half]
        if not tall:
            return True
        for side in (self.left.slots, self.right.slots):
            codes, sizes = cat.walk(side)
            if not all(cat.le(c, codes[-1], sizes[-1]) for c in tall):
                return False
        return True

    def realize(self) -> Tree:
        """Backbone vertices ``0..m-1`` along the path, appendices after."""
        cat = catalog()
        m = self.backbone_order
        half = m // 2
        edges = [(i, i + 1) for i in range(m - 1)]
        nxt = m

        def hang(host: int, a: int) -> None:
            nonlocal nxt
            h = cat.trees[a]
            edges.append((host, nxt))
            edges.extend((u + nxt, c + nxt) for u in range(h.order) for c in h.children[u])
            nxt += h.order

        for d in range(half):
            for a in self.left.slots[d]:
                hang(d, a)
        if self.middle is not None:
            for a in self.middle:
                hang(half, a)
        for d in range(half):
            for a in self.right.slots[d]:
                hang(m - 1 - d, a)
        return Tree(nxt, tuple(edges))


@dataclass
class GeneratedSet:
    """Decorated backbones of one order and diameter, with their tally."""

    backbone_order: int
    members: list[DecoratedBackbone] = field(default_factory=list)

    @property
    def sym(self) -> SymCount:
        sigma = sum(1 for d in self.members if d.symmetric)
        return SymCount(sigma, len(self.members) - sigma)

    @property
    def trees(self) -> list[Tree]:
        return [d.realize() for d in self.members]

    def __len__(self) -> int:
        return len(self.members)

    def extend(self, other: GeneratedSet) -> None:
        if other.members and other.backbone_order != self.backbone_order:
            raise ValueError("sets of different backbones")
        self.members.extend(other.members)


@dataclass(frozen=True)
class CombineRecord:
    """Bookkeeping of one combination, kept when auditing."""

    left: SymCount
    right: SymCount
    raw: SymCount
    raw_distinct: bool
    result: GeneratedSet


def _unit(m: int) -> DecoratedBackbone:
    half = m // 2
    bare = Placement.bare(half)
    return DecoratedBackbone(m, bare, bare, () if m % 2 else None)


def fuse(left_set: Sequence[Placement], right_set: Sequence[Placement], same_inputs: bool) -> GeneratedSet:
    """Glue decorated halves into decorated backbones.

    With ``same_inputs`` the two sequences must be equal and unordered pairs
    with repetition are formed; otherwise every cross pair is formed.
    """
    halves = {p.backbone_order for p in (*left_set, *right_set)}
    if len(halves) > 1:
        raise ValueError(f"halves of different heights: {sorted(halves)}")
    if not halves:
        return GeneratedSet(0)
    s = halves.pop()
    m = 2 * s
    if same_inputs:
        if list(left_set) != list(right_set):
            raise ValueError("same_inputs requires identical sequences")
        members = [
            DecoratedBackbone(m, left_set[i], left_set[j])
            for i in range(len(left_set))
            for j in range(i, len(left_set))
        ]
    else:
        members = [DecoratedBackbone(m, a, b) for a in left_set for b in right_set]
    return GeneratedSet(m, members)


def _with_middle(gs: GeneratedSet) -> GeneratedSet:
    m = gs.backbone_order + 1
    return GeneratedSet(
        m, [DecoratedBackbone(m, d.left, d.right, d.middle if d.middle is not None else ()) for d in gs.members]
    )


def combine(
    S: GeneratedSet,
    T: GeneratedSet,
    audit: list[CombineRecord] | None = None,
) -> GeneratedSet:
    """Overlay every member of ``S`` with every member of ``T``.

    Two asymmetric members overlay in both relative orientations. Overlays
    whose terminal appendices exceed their tips are dropped afterwards.
    """
    if S.backbone_order != T.backbone_order:
        raise ValueError(f"backbones of order {S.backbone_order} and {T.backbone_order}")
    raw: list[DecoratedBackbone] = []
    for s in S.members:
        for t in T.members:
            raw.append(s.overlay(t))
            if not s.symmetric and not t.symmetric:
                raw.append(s.overlay(t.mirrored()))
    result = GeneratedSet(S.backbone_order, [d for d in raw if d.valid()])
    if audit is not None:
        raw_set = GeneratedSet(S.backbone_order, raw)
        keys = {_pair_key(d) for d in raw}
        audit.append(CombineRecord(S.sym, T.sym, raw_set.sym, len(keys) == len(raw), result))
    return result


def _pair_key(d: DecoratedBackbone) -> tuple:
    sides = sorted((d.left.slots, d.right.slots))
    return (tuple(sides), d.middle)


def attach_middle(backbone_order: int, C: AppendixSet) -> Tree:
    """The bare backbone with every appendix of ``C`` hung from its middle vertex."""
    return _middle_member(backbone_order, C).realize()


def _middle_member(backbone_order: int, C: AppendixSet) -> DecoratedBackbone:
    if backbone_order % 2 == 0:
        raise ValueError("only odd backbones have a middle vertex")
    cat = catalog()
    ids = tuple(sorted(a for a, m in C.elements() for _ in range(m)))
    if any(cat.radii[a] > backbone_order // 2 for a in ids):
        raise ValueError(f"appendix too long for the middle of a backbone of order {backbone_order}")
    bare = Placement.bare(backbone_order // 2)
    return DecoratedBackbone(backbone_order, bare, bare, ids)


def step_of(t: Tree, n: int) -> int:
    if t.order != n:
        raise ValueError(f"tree has order {t.order}, expected {n}")
    return n - diameter(t) - 1


def mirror_symmetric(t: Tree) -> bool:
    """Whether the two decorated halves of ``t`` are isomorphic.

    Bicentral trees split at the central edge. For a centered tree the halves
    are the two greatest tallest branches of the center in listing order.
    """
    c = center(t)
    if len(c) == 2:
        return is_symmetric(t)
    from .graphcore import _subtree

    cat = catalog()
    branches = [_subtree(t, v, c[0]) for v in t.adjacency[c[0]]]
    top = max(b.height for b in branches)
    tall = sorted((cat.index_of(b) for b in branches if b.height == top), reverse=True)
    return len(tall) >= 2 and tall[0] == tall[1]


class TreeEnumerator:
    """Runs the step loop; optional audit of every combination and set."""

    def __init__(self, audit: bool = False, appendix_filter: Callable[[int], bool] | None = None) -> None:
        self.audit: list[CombineRecord] | None = [] if audit else None
        self.sets: list[GeneratedSet] = []
        self.appendix_filter = appendix_filter

    def _record(self, gs: GeneratedSet) -> GeneratedSet:
        if self.audit is not None:
            self.sets.append(gs)
        return gs

    def _appendix_sets(self, p: Partition) -> Iterator[AppendixSet]:
        for aset in catalog().appendix_sets(p):
            if self.appendix_filter is None or all(self.appendix_filter(a) for a, _ in aset.elements()):
                yield aset

    def per_element(self, a: int, count: int, s: int) -> GeneratedSet:
        """Fused decorations from ``count`` copies of one appendix over two halves."""
        cat = catalog()
        out = GeneratedSet(2 * s)
        for i in range(count // 2 + 1):
            left = [Placement(s, sl) for sl in cat.h_prime_slots(count - i, a, s)]
            right = left if count - i == i else [Placement(s, sl) for sl in cat.h_prime_slots(i, a, s)]
            out.extend(fuse(left, right, same_inputs=count - i == i))
        return self._record(out)

    def sides(self, aset: AppendixSet, s: int) -> GeneratedSet:
        """All valid two-sided decorations by one appendix set, halves of order ``s``."""
        cat = catalog()
        layers = sorted(aset.elements(), key=lambda am: (cat.radii[am[0]], am[0]))
        acc = GeneratedSet(2 * s, [_unit(2 * s)])
        for a, count in layers:
            fh = self.per_element(a, count, s)
            acc = self._record(combine(acc, fh, self.audit))
            if not acc.members:
                break
        return acc

    def even_step(self, n: int, k: int) -> GeneratedSet:
        m = n - k
        out = GeneratedSet(m)
        for p in partitions(k):
            for aset in self._appendix_sets(p):
                out.extend(self.sides(aset, m // 2))
        return self._record(out)

    def odd_step(self, n: int, k: int) -> GeneratedSet:
        m = n - k
        s = m // 2
        cat = catalog()
        out = GeneratedSet(m)
        for j in range(k + 1):
            fh_j = GeneratedSet(m)
            for q in partitions(k - j):
                for bset in self._appendix_sets(q):
                    fh_j.extend(_with_middle(self.sides(bset, s)))
            self._record(fh_j)
            if not fh_j.members:
                continue
            for J in partitions(j):
                for cset in self._appendix_sets(J):
                    if max((cat.radii[c] for c, _ in cset.elements()), default=0) > s:
                        continue
                    middle = GeneratedSet(m, [_middle_member(m, cset)])
                    out.extend(self._record(combine(middle, fh_j, self.audit)))
        return self._record(out)

    def step(self, n: int, k: int) -> GeneratedSet:
        if not 0 <= k <= n - 3:
            raise ValueError(f"step {k} out of range for order {n}")
        catalog().ensure(max(k, n - 3, 1))
        return self.even_step(n, k) if (n - k) % 2 == 0 else self.odd_step(n, k)

    def iter_steps(self, n: int) -> Iterator[tuple[int, Tree]]:
        """``(step, tree)`` pairs in emission order."""
        if n < 1:
            raise ValueError(f"invalid order {n}")
        if n == 1:
            yield 0, Tree(1, ())
            return
        if n == 2:
            yield 0, Tree(2, ((0, 1),))
            return
        for k in range(n - 2):
            for t in self.step(n, k).trees:
                yield k, t


def iter_trees(n: int, step: int | None = None) -> Iterator[Tree]:
    for k, t in TreeEnumerator().iter_steps(n):
        if step is None or k == step:
            yield t


def list_trees(n: int) -> list[Tree]:
    """Every unlabeled tree of order ``n`` exactly once, by ascending step."""
    return list(iter_trees(n))


def assert_distinct(trees: Sequence[Tree]) -> None:
    seen: dict[bytes, int] = {}
    for i, t in enumerate(trees):
        code = canonical_free(t)
        if code in seen:
            raise AssertionError(f"trees {seen[code]} and {i} are isomorphic")
        seen[code] = i


def _path_ids() -> Callable[[int], bool]:
    cat = catalog()
    return lambda a: cat.radii[a] == cat.orders[a]


def _copies(a: int, count: int) -> AppendixSet:
    order = catalog().orders[a]
    if count == 0:
        return AppendixSet(Partition(0, ()), ())
    return AppendixSet(Partition(order * count, ((order, count),)), (FixedOrderMultiset(order, (a,) * count),))


def equal_radius_set(k: int, r: int, n: int) -> GeneratedSet:
    """Decorations of a backbone of order ``n`` by ``k`` rooted paths of order ``r``."""
    if n < 3 or k < 0 or r < 1:
        raise ValueError(f"invalid arguments k={k}, r={r}, n={n}")
    s = n // 2
    if r > s:
        # no slot at distance r on either half, and too long for the middle
        return GeneratedSet(n, [_unit(n)] if k == 0 else [])
    a = catalog().index_of(rooted_path(r))
    enum = TreeEnumerator()
    if n % 2 == 0:
        return enum.sides(_copies(a, k), s)
    out = GeneratedSet(n)
    for j in range(k + 1 if r <= s else 1):
        sides = _with_middle(enum.sides(_copies(a, k - j), s))
        middle = GeneratedSet(n, [_middle_member(n, _copies(a, j))])
        out.extend(combine(middle, sides))
    return out


def linear_step(k: int, n: int) -> GeneratedSet:
    """Step ``k`` on a backbone of order ``n`` with only rooted paths as appendices."""
    catalog().ensure(max(k, 1))
    return TreeEnumerator(appendix_filter=_path_ids()).step(n + k, k)
