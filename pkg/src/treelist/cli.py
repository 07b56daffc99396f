"""Command-line entry point: ``treelist {list,count,verify,halftrees,formulas}``.

Exit status is 0 on success, 1 when a verification or formula check fails and
2 on usage errors. ``TREELIST_MAX_ORDER`` and ``TREELIST_ORACLE_CAP`` override
the order limits for generation and for the brute-force oracle.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Iterable, Sequence, TextIO

from . import counting
from .formats import edge_list_record, graph6_encode
from .graphcore import Tree, canonical_free, diameter
from .halftrees import list_halftrees, nu
from .oracle import oracle_free_representatives
from .treeenum import TreeEnumerator, equal_radius_set, linear_step

DEFAULT_MAX_ORDER = 16
DEFAULT_ORACLE_CAP = 14

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _limit(var: str, default: int) -> int:
    raw = os.environ.get(var)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{var} must be an integer, got {raw!r}") from None


def _check_order(n: int, low: int = 1) -> None:
    cap = _limit("TREELIST_MAX_ORDER", DEFAULT_MAX_ORDER)
    if not low <= n <= cap:
        raise UsageError(f"order must be between {low} and {cap}, got {n}")


def _record(t: Tree, fmt: str) -> str:
    return graph6_encode(t) if fmt == "graph6" else edge_list_record(t)


def generate(n: int) -> Iterable[tuple[int, Tree]]:
    """``(step, tree)`` pairs from the backbone generator."""
    return TreeEnumerator().iter_steps(n)


def cmd_list(args: argparse.Namespace, out: TextIO) -> int:
    _check_order(args.n)
    if args.step is not None and not 0 <= args.step <= max(args.n - 3, 0):
        raise UsageError(f"step must be between 0 and {max(args.n - 3, 0)}")
    count = 0
    for k, t in generate(args.n):
        if args.step is None or k == args.step:
            out.write(_record(t, args.format) + "\n")
            count += 1
    if args.format == "edge-list":
        out.write(f"# count={count}\n")
    return EXIT_OK


def cmd_count(args: argparse.Namespace, out: TextIO) -> int:
    _check_order(args.n)
    per_diameter: dict[int, int] = {}
    for _, t in generate(args.n):
        d = diameter(t)
        per_diameter[d] = per_diameter.get(d, 0) + 1
    out.write(f"{sum(per_diameter.values())}\n")
    if args.by_diameter:
        for d in sorted(per_diameter, reverse=True):
            out.write(f"{d}: {per_diameter[d]}\n")
    return EXIT_OK


def verify_order(n: int, generated: Sequence[Tree], out: TextIO) -> bool:
    """Compare one order against the oracle; report the first divergence."""
    oracle = {canonical_free(t): t for t in oracle_free_representatives(n)}
    seen: dict[bytes, Tree] = {}
    for t in generated:
        code = canonical_free(t)
        if code in seen:
            out.write(f"n={n} FAIL duplicate\n")
            _show(out, "duplicate", t)
            return False
        if code not in oracle:
            out.write(f"n={n} FAIL not a tree of the oracle\n")
            _show(out, "extra", t)
            return False
        seen[code] = t
    missing = [t for code, t in oracle.items() if code not in seen]
    if missing:
        out.write(f"n={n} FAIL generated={len(seen)} oracle={len(oracle)}\n")
        _show(out, "missing", missing[0])
        return False
    out.write(f"n={n} PASS {len(seen)}\n")
    return True


def _show(out: TextIO, label: str, t: Tree) -> None:
    out.write(f"  {label}: {edge_list_record(t)}\n  {label}: {graph6_encode(t)}\n")


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    cap = _limit("TREELIST_ORACLE_CAP", DEFAULT_ORACLE_CAP)
    if not 1 <= args.n_max <= cap:
        raise UsageError(f"verify is limited to 1 <= n_max <= {cap} (set TREELIST_ORACLE_CAP to raise it)")
    ok = True
    for n in range(1, args.n_max + 1):
        ok &= verify_order(n, [t for _, t in generate(n)], out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_halftrees(args: argparse.Namespace, out: TextIO) -> int:
    _check_order(args.n)
    for h in list_halftrees(args.n):
        record = graph6_encode(h.as_tree()) if args.format == "graph6" else edge_list_record(h.as_tree())
        out.write(f"nu={nu(h)} height={h.height} {record}\n")
    return EXIT_OK


def _verdict(label: str, formula: int, generated: int, out: TextIO) -> bool:
    agree = formula == generated
    out.write(f"{label}: formula={formula} generated={generated} {'AGREE' if agree else 'DISAGREE'}\n")
    return agree


def cmd_formulas(args: argparse.Namespace, out: TextIO) -> int:
    k, r, n = args.k, args.r, args.n
    if k < 0 or r < 1:
        raise UsageError("need k >= 0 and r >= 1")
    _check_order(n, low=3)
    if r <= n // 2:
        _check_order(n + k * r, low=3)
    _check_order(n + k, low=3)
    slots = max(0, (n - 2 * r) // 2)
    out.write(f"k={k} r={r} n={n} slots_per_half={slots}\n")
    out.write(f"G(k, slots)={counting.G(k, slots)}\n")
    out.write(f"F(k, 0, slots)={counting.F(k, 0, slots)}\n")
    ok = _verdict("equal_radius", counting.count_equal_radius(k, r, n), len(equal_radius_set(k, r, n)), out)
    ok &= _verdict("linear_total", counting.count_linear_total(k, n), len(linear_step(k, n)), out)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="treelist", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="stream every tree of order n")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("edge-list", "graph6"), default="edge-list")
    p.add_argument("--step", type=int, default=None, help="only trees of this step (edge-diameter n-step-1)")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("count", help="count trees of order n from the generator")
    p.add_argument("n", type=int)
    p.add_argument("--by-diameter", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="compare the generator with the brute-force oracle for n <= n_max")
    p.add_argument("n_max", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("halftrees", help="list half-trees of order n with their primes")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("edge-list", "graph6"), default="edge-list")
    p.set_defaults(func=cmd_halftrees)

    p = sub.add_parser("formulas", help="evaluate the counting formulas against generated sets")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_formulas)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out or sys.stdout)
    except UsageError as exc:
        print(f"treelist: {exc}", file=sys.stderr)
        return EXIT_USAGE

