"""Tree and rooted-tree value types, metrics and canonical forms."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "Tree",
    "HalfTree",
    "CanonicalForm",
    "linear_tree",
    "rooted_path",
    "diameter",
    "height",
    "center",
    "canonical_rooted",
    "canonical_free",
    "split_at_central_edge",
    "is_symmetric",
]


class CanonicalForm(bytes):
    """AHU-style parenthesis encoding; compares as a byte string."""

    def __repr__(self) -> str:
        return f"CanonicalForm({bytes.decode(self, 'ascii')})"


@dataclass(frozen=True)
class Tree:
    """An undirected tree on vertices ``0..order-1``.

    ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``, sorted.
    """

    order: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"tree order must be positive, got {self.order}")
        norm = tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges))
        object.__setattr__(self, "edges", norm)
        if len(norm) != self.order - 1:
            raise ValueError(f"a tree of order {self.order} needs {self.order - 1} edges, got {len(norm)}")
        if len(set(norm)) != len(norm):
            raise ValueError("duplicate edge")
        for u, v in norm:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if u < 0 or v >= self.order:
                raise ValueError(f"edge ({u}, {v}) out of range")
        if len(_bfs_dist(self.adjacency, 0)) != self.order:
            raise ValueError("edges do not form a connected graph")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Tree:
        return cls(order, tuple(edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class HalfTree:
    """A rooted tree: ``children[v]`` lists the children of vertex ``v``.

    ``height`` is derived on construction (max root-to-leaf distance in edges).
    """

    order: int
    root: int
    children: tuple[tuple[int, ...], ...]
    height: int = field(init=False)

    def __post_init__(self) -> None:
        children = tuple(tuple(c) for c in self.children)
        object.__setattr__(self, "children", children)
        if self.order < 1 or len(children) != self.order:
            raise ValueError("children must list one entry per vertex")
        depth = {self.root: 0}
        queue = deque([self.root])
        while queue:
            u = queue.popleft()
            for c in children[u]:
                if c in depth:
                    raise ValueError(f"vertex {c} reached twice")
                depth[c] = depth[u] + 1
                queue.append(c)
        if len(depth) != self.order:
            raise ValueError("children do not span every vertex from the root")
        object.__setattr__(self, "height", max(depth.values()))

    @classmethod
    def from_parents(cls, parents: Sequence[int]) -> HalfTree:
        """Build from a parent array; the root has parent ``-1``."""
        children: list[list[int]] = [[] for _ in parents]
        root = -1
        for v, p in enumerate(parents):
            if p < 0:
                if root >= 0:
                    raise ValueError("more than one root")
                root = v
            else:
                children[p].append(v)
        if root < 0:
            raise ValueError("no root")
        return cls(len(parents), root, tuple(tuple(c) for c in children))

    def as_tree(self) -> Tree:
        return Tree(self.order, tuple((u, c) for u in range(self.order) for c in self.children[u]))

    @cached_property
    def code(self) -> CanonicalForm:
        return _rooted_code(self.children, self.root)


def linear_tree(n: int) -> Tree:
    """The path L_n on ``n`` vertices, labeled along the path."""
    if n < 1:
        raise ValueError(f"invalid order {n}")
    return Tree(n, tuple((i, i + 1) for i in range(n - 1)))


def rooted_path(n: int) -> HalfTree:
    """A path on ``n`` vertices rooted at one end (vertex 0)."""
    if n < 1:
        raise ValueError(f"invalid order {n}")
    return HalfTree(n, 0, tuple((i + 1,) if i + 1 < n else () for i in range(n)))


def _bfs_dist(adj: Sequence[Sequence[int]], src: int) -> dict[int, int]:
    dist = {src: 0}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def _farthest(adj: Sequence[Sequence[int]], src: int) -> tuple[int, dict[int, int]]:
    dist = _bfs_dist(adj, src)
    far = max(dist, key=lambda v: (dist[v], -v))
    return far, dist


def diameter(t: Tree) -> int:
    """Edge length of a longest path, by two breadth-first sweeps."""
    a, _ = _farthest(t.adjacency, 0)
    b, dist = _farthest(t.adjacency, a)
    return dist[b]


def height(h: HalfTree) -> int:
    best = 0
    stack = [(h.root, 0)]
    while stack:
        u, d = stack.pop()
        best = max(best, d)
        stack.extend((c, d + 1) for c in h.children[u])
    return best


def longest_path(t: Tree) -> list[int]:
    """Vertices of one longest path, from one end to the other."""
    a, _ = _farthest(t.adjacency, 0)
    parent = {a: -1}
    queue = deque([a])
    last = a
    while queue:
        u = queue.popleft()
        last = u
        for v in t.adjacency[u]:
            if v not in parent:
                parent[v] = u
                queue.append(v)
    path = [last]
    while parent[path[-1]] >= 0:
        path.append(parent[path[-1]])
    return path


def center(t: Tree) -> tuple[int, ...]:
    """One center vertex, or the two endpoints of the central edge."""
    path = longest_path(t)
    d = len(path) - 1
    if d % 2 == 0:
        return (path[d // 2],)
    return tuple(sorted((path[d // 2], path[d // 2 + 1])))


def _rooted_code(children: Sequence[Sequence[int]], root: int) -> CanonicalForm:
    order: list[int] = []
    stack = [root]
    while stack:
        u = stack.pop()
        order.append(u)
        stack.extend(children[u])
    codes: dict[int, bytes] = {}
    for u in reversed(order):
        codes[u] = b"(" + b"".join(sorted(codes[c] for c in children[u])) + b")"
    return CanonicalForm(codes[root])


def _orient(t: Tree, root: int, blocked: int = -1) -> list[tuple[int, ...]]:
    """Children lists of ``t`` hung from ``root``; ``blocked`` is cut off."""
    children: list[tuple[int, ...]] = [()] * t.order
    seen = {root, blocked}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        kids = tuple(v for v in t.adjacency[u] if v not in seen)
        seen.update(kids)
        children[u] = kids
        queue.extend(kids)
    return children


def canonical_rooted(h: HalfTree) -> CanonicalForm:
    """Code invariant under root-preserving isomorphism."""
    return h.code


def canonical_free(t: Tree) -> CanonicalForm:
    """Code invariant under isomorphism; rooted at the center.

    For a bicentral tree both endpoints of the central edge are tried and the
    smaller code is kept.
    """
    return min(_rooted_code(_orient(t, c), c) for c in center(t))


def _subtree(t: Tree, root: int, blocked: int) -> HalfTree:
    children = _orient(t, root, blocked)
    keep: list[int] = []
    stack = [root]
    while stack:
        u = stack.pop()
        keep.append(u)
        stack.extend(children[u])
    keep.sort()
    relabel = {v: i for i, v in enumerate(keep)}
    return HalfTree(
        len(keep),
        relabel[root],
        tuple(tuple(relabel[c] for c in children[v]) for v in keep),
    )


def split_at_central_edge(t: Tree) -> tuple[HalfTree, HalfTree]:
    """The two rooted halves on either side of the central edge."""
    c = center(t)
    if len(c) != 2:
        raise ValueError("tree has a single center vertex")
    u, v = c
    return _subtree(t, u, v), _subtree(t, v, u)


def is_symmetric(t: Tree) -> bool:
    """True iff the halves at the central edge are isomorphic as rooted trees.

    Centered trees (odd vertex count on a longest path) are reported as not
    symmetric; their mirror symmetry is judged by the enumerator instead.
    """
    if len(center(t)) != 2:
        return False
    left, right = split_at_central_edge(t)
    return left.code == right.code
