"""Brute-force ground truth: grow every tree by one leaf and deduplicate.

Nothing here touches the backbone machinery, so agreement with
:mod:`treelist.treeenum` is evidence rather than tautology.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .graphcore import CanonicalForm, HalfTree, Tree, canonical_free, canonical_rooted, diameter

__all__ = [
    "CountTable",
    "oracle_free_trees",
    "oracle_rooted_trees",
    "oracle_by_diameter",
    "prufer_free_trees",
    "rooted_count",
    "count_table",
]


def _grow(t: Tree) -> list[Tree]:
    return [Tree(t.order + 1, (*t.edges, (v, t.order))) for v in range(t.order)]


@lru_cache(maxsize=None)
def _free(n: int) -> dict[CanonicalForm, Tree]:
    if n == 1:
        single = Tree(1, ())
        return {canonical_free(single): single}
    found: dict[CanonicalForm, Tree] = {}
    for parent in _free(n - 1).values():
        for child in _grow(parent):
            found.setdefault(canonical_free(child), child)
    return dict(sorted(found.items()))


def oracle_free_trees(n: int) -> list[CanonicalForm]:
    """Sorted canonical codes of all unlabeled trees of order ``n``."""
    if n < 1:
        raise ValueError(f"invalid order {n}")
    return list(_free(n))


def oracle_free_representatives(n: int) -> list[Tree]:
    if n < 1:
        raise ValueError(f"invalid order {n}")
    return list(_free(n).values())


@lru_cache(maxsize=None)
def _rooted(n: int) -> tuple[CanonicalForm, ...]:
    if n == 1:
        return (canonical_rooted(HalfTree(1, 0, ((),))),)
    found: set[CanonicalForm] = set()
    for code in _rooted(n - 1):
        parents = _parents_from_code(code)
        for v in range(len(parents)):
            found.add(canonical_rooted(HalfTree.from_parents([*parents, v])))
    return tuple(sorted(found))


def _parents_from_code(code: bytes) -> list[int]:
    parents: list[int] = []
    stack: list[int] = []
    for ch in code:
        if ch == ord("("):
            parents.append(stack[-1] if stack else -1)
            stack.append(len(parents) - 1)
        else:
            stack.pop()
    return parents


def oracle_rooted_trees(n: int) -> list[CanonicalForm]:
    """Sorted canonical codes of all rooted trees of order ``n``."""
    if n < 1:
        raise ValueError(f"invalid order {n}")
    return list(_rooted(n))


def oracle_by_diameter(n: int) -> dict[int, int]:
    """Free-tree counts of order ``n`` per edge-diameter, by decreasing diameter."""
    if n < 1:
        raise ValueError(f"invalid order {n}")
    counts: dict[int, int] = {}
    for t in _free(n).values():
        d = diameter(t)
        counts[d] = counts.get(d, 0) + 1
    return dict(sorted(counts.items(), reverse=True))


def _prufer_decode(seq: tuple[int, ...], n: int) -> Tree:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = next(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return Tree(n, tuple(edges))


def prufer_free_trees(n: int) -> list[CanonicalForm]:
    """Second oracle: decode every Prüfer sequence and deduplicate. Small ``n`` only."""
    if n < 1 or n > 8:
        raise ValueError("the Prüfer oracle is limited to 1 <= n <= 8")
    if n <= 2:
        return oracle_free_trees(n)
    codes = {canonical_free(_prufer_decode(seq, n)) for seq in itertools.product(range(n), repeat=n - 2)}
    return sorted(codes)


@lru_cache(maxsize=None)
def rooted_count(n: int) -> int:
    """Rooted trees of order ``n`` by the divisor-sum convolution recurrence."""
    if n < 1:
        raise ValueError(f"invalid order {n}")
    if n == 1:
        return 1
    total = 0
    for k in range(1, n):
        inner = sum(d * rooted_count(d) for d in range(1, k + 1) if k % d == 0)
        total += inner * rooted_count(n - k)
    return total // (n - 1)


@dataclass
class CountTable:
    """Per-order oracle counts."""

    free: dict[int, int] = field(default_factory=dict)
    rooted: dict[int, int] = field(default_factory=dict)
    per_diameter: dict[int, dict[int, int]] = field(default_factory=dict)


def count_table(n_max: int) -> CountTable:
    table = CountTable()
    for n in range(1, n_max + 1):
        table.free[n] = len(_free(n))
        table.rooted[n] = len(_rooted(n))
        table.per_diameter[n] = oracle_by_diameter(n)
    return table
