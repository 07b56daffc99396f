"""Edge-list and graph6 records for trees."""

from __future__ import annotations

from .graphcore import Tree

__all__ = ["edge_list_record", "parse_edge_list_record", "graph6_encode", "graph6_decode"]


def edge_list_record(t: Tree) -> str:
    """``n; u-v,u-v,...`` with the generator's 0-based labels."""
    body = ",".join(f"{u}-{v}" for u, v in t.edges)
    return f"{t.order}; {body}" if body else f"{t.order};"


def parse_edge_list_record(line: str) -> Tree:
    head, _, body = line.partition(";")
    edges = []
    for item in body.strip().split(","):
        if item:
            u, v = item.split("-")
            edges.append((int(u), int(v)))
    return Tree(int(head), tuple(edges))


def _size_prefix(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise ValueError(f"graph6 size field cannot hold {n}")


def graph6_encode(t: Tree) -> str:
    """Standard graph6: size field, then the upper triangle column by column."""
    n = t.order
    adjacent = set(t.edges)
    bits = [1 if (i, j) in adjacent else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + int("".join(map(str, bits[k : k + 6])), 2) for k in range(0, len(bits), 6)
    )
    return (_size_prefix(n) + body).decode("ascii")


def graph6_decode(record: str) -> Tree:
    data = record.strip().encode("ascii")
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if data[0] == 126:
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        data = data[4:]
    else:
        n = data[0] - 63
        data = data[1:]
    bits = [(byte - 63) >> shift & 1 for byte in data for shift in range(5, -1, -1)]
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    return Tree(n, tuple(p for p, b in zip(pairs, bits) if b))
