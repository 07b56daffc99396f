"""Generator-independent helpers shared by the tests."""

from __future__ import annotations

import itertools
from collections import deque

from treelist.graphcore import HalfTree, Tree, diameter
from treelist.oracle import oracle_free_representatives


def distances(t: Tree, src: int) -> list[int]:
    dist = [-1] * t.order
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v in t.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def path_between(t: Tree, a: int, b: int) -> list[int]:
    dist = distances(t, b)
    path = [a]
    while path[-1] != b:
        u = path[-1]
        path.append(next(v for v in t.adjacency[u] if dist[v] == dist[u] - 1))
    return path


def hanging_pieces(t: Tree, path: list[int]) -> list[tuple[int, list[int]]]:
    """Components of ``t`` minus ``path`` as (root next to the path, members)."""
    on_path = set(path)
    seen = set(on_path)
    pieces = []
    for p in path:
        for r in t.adjacency[p]:
            if r in seen:
                continue
            members = [r]
            seen.add(r)
            queue = deque([r])
            while queue:
                u = queue.popleft()
                for v in t.adjacency[u]:
                    if v not in seen:
                        seen.add(v)
                        members.append(v)
                        queue.append(v)
            pieces.append((r, members))
    return pieces


def is_rooted_path(t: Tree, root: int, members: list[int]) -> bool:
    inside = set(members)
    degrees = {u: sum(1 for v in t.adjacency[u] if v in inside) for u in members}
    return all(d <= 2 for d in degrees.values()) and degrees[root] <= 1


def longest_paths(t: Tree) -> list[list[int]]:
    d = diameter(t)
    out = []
    for a in range(t.order):
        dist = distances(t, a)
        for b in range(a + 1, t.order):
            if dist[b] == d:
                out.append(path_between(t, a, b))
    return out


def count_decorated(order: int, backbone: int, accept) -> int:
    """Trees of ``order`` with a longest path of ``backbone`` vertices whose
    hanging pieces all satisfy ``accept(tree, root, members)`` for some such path."""
    total = 0
    for t in oracle_free_representatives(order):
        if diameter(t) != backbone - 1:
            continue
        if any(
            all(accept(t, r, m) for r, m in hanging_pieces(t, path)) for path in longest_paths(t)
        ):
            total += 1
    return total


def isomorphic_brute(a: Tree, b: Tree) -> bool:
    """Exhaustive permutation search; small trees only."""
    if a.order != b.order:
        return False
    target = set(b.edges)
    for perm in itertools.permutations(range(a.order)):
        if all(tuple(sorted((perm[u], perm[v]))) in target for u, v in a.edges):
            return True
    return False


def rooted_isomorphic_brute(a: HalfTree, b: HalfTree) -> bool:
    if a.order != b.order:
        return False
    ta, tb = a.as_tree(), b.as_tree()
    target = set(tb.edges)
    others = [v for v in range(a.order) if v != a.root]
    images = [v for v in range(b.order) if v != b.root]
    for perm in itertools.permutations(images):
        mapping = dict(zip(others, perm))
        mapping[a.root] = b.root
        if all(tuple(sorted((mapping[u], mapping[v]))) in target for u, v in ta.edges):
            return True
    return False


def prufer_tree(seq: list[int]) -> Tree:
    n = len(seq) + 2
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return Tree(n, tuple(edges))
