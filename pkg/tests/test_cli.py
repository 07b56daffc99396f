from __future__ import annotations

import io
import subprocess
import sys

import pytest

from treelist import cli
from treelist.formats import graph6_decode, parse_edge_list_record
from treelist.graphcore import Tree, canonical_free, diameter, linear_tree
from treelist.oracle import oracle_free_trees


def run(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def records(text: str) -> list[str]:
    return [line for line in text.splitlines() if not line.startswith("#")]


def test_list_five():
    code, text = run("list", "5")
    assert code == 0
    assert len(records(text)) == 3
    assert text.endswith("# count=3\n")
    assert all(line == line.rstrip() for line in text.splitlines())


def test_list_step_filter_gives_the_star():
    code, text = run("list", "5", "--step", "2")
    (line,) = records(text)
    t = parse_edge_list_record(line)
    assert code == 0 and diameter(t) == 2 and max(len(a) for a in t.adjacency) == 4


@pytest.mark.parametrize("argv", [["list", "0"], ["list", "99"], ["list", "5", "--step", "7"], ["count", "-1"]])
def test_invalid_order_is_a_usage_error(argv, capsys):
    code, text = run(*argv)
    assert code == 2 and text == ""
    assert "treelist:" in capsys.readouterr().err


def test_list_graph6_records_decode_to_the_oracle():
    code, text = run("list", "8", "--format", "graph6")
    assert code == 0
    codes = sorted(canonical_free(graph6_decode(line)) for line in text.splitlines())
    assert codes == oracle_free_trees(8)


@pytest.mark.parametrize("n, total", [(10, "106"), (1, "1"), (2, "1")])
def test_count(n, total):
    code, text = run("count", str(n))
    assert code == 0 and text.splitlines()[0] == total


def test_count_by_diameter():
    code, text = run("count", "8", "--by-diameter")
    lines = text.splitlines()
    assert lines[0] == "23"
    assert "5: 7" in lines
    assert lines[1:] == ["7: 1", "6: 3", "5: 7", "4: 8", "3: 3", "2: 1"]


def test_verify_passes():
    code, text = run("verify", "10")
    lines = text.splitlines()
    assert code == 0
    assert len(lines) == 10 and all(" PASS " in line for line in lines)


def test_verify_refuses_above_cap(capsys):
    code, _ = run("verify", "30")
    assert code == 2
    assert "TREELIST_ORACLE_CAP" in capsys.readouterr().err


def test_verify_cap_override(monkeypatch):
    monkeypatch.setenv("TREELIST_ORACLE_CAP", "3")
    assert run("verify", "4")[0] == 2
    assert run("verify", "3")[0] == 0


def _drop_last(n):
    emitted = list(cli.TreeEnumerator().iter_steps(n))
    return emitted[:-1] if n >= 6 else emitted


def _duplicate_first(n):
    emitted = list(cli.TreeEnumerator().iter_steps(n))
    return emitted + emitted[:1] if n >= 6 else emitted


def _shorten_path(n):
    # off-by-one: the path of order n is replaced by one of order n - 1 plus a stray leaf
    for k, t in cli.TreeEnumerator().iter_steps(n):
        if n >= 6 and k == 0:
            edges = tuple(e for e in linear_tree(n - 1).edges) + ((1, n - 1),)
            yield k, Tree(n, edges)
        else:
            yield k, t


@pytest.mark.parametrize(
    "bug, reason",
    # the shortened path collides with a legitimate tree of order n
    [(_drop_last, "missing"), (_duplicate_first, "duplicate"), (_shorten_path, "duplicate")],
)
def test_verify_reports_injected_bugs(monkeypatch, bug, reason):
    monkeypatch.setattr(cli, "generate", bug)
    code, text = run("verify", "6")
    assert code == 1
    assert "n=5 PASS" in text and "n=6 FAIL" in text
    detail = [line.strip() for line in text.splitlines() if line.startswith("  ")]
    assert len(detail) == 2 and all(line.startswith(reason + ":") for line in detail)
    # the counterexample is given in both formats
    assert ";" in detail[0] and ";" not in detail[1]


def test_halftrees_three():
    code, text = run("halftrees", "3")
    lines = text.splitlines()
    assert code == 0
    assert [line.split()[0] for line in lines] == ["nu=5", "nu=7"]


def test_halftrees_graph6():
    code, text = run("halftrees", "4", "--format", "graph6")
    assert code == 0 and len(text.splitlines()) == 4


@pytest.mark.parametrize(
    "k, r, n, formula",
    [("2", "1", "6", "formula=6 generated=6 AGREE"), ("1", "9", "4", "formula=0 generated=0 AGREE")],
)
def test_formulas(k, r, n, formula):
    code, text = run("formulas", "--k", k, "--r", r, "--n", n)
    assert code == 0
    assert f"equal_radius: {formula}" in text
    assert "DISAGREE" not in text


def test_formulas_rejects_bad_parameters():
    assert run("formulas", "--k", "-1", "--r", "1", "--n", "6")[0] == 2
    assert run("formulas", "--k", "1", "--r", "0", "--n", "6")[0] == 2
    assert run("formulas", "--k", "1", "--r", "1", "--n", "2")[0] == 2


def test_missing_subcommand_is_usage_error():
    assert run()[0] == 2


@pytest.mark.slow
def test_output_is_byte_identical_across_processes():
    cmd = [sys.executable, "-m", "treelist", "list", "10", "--format", "graph6"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first.count(b"\n") == 106
