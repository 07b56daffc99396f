from __future__ import annotations

import itertools
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from brute import count_decorated, is_rooted_path
from treelist.combinatorics import multichoose
from treelist.counting import (
    UNIT,
    F,
    G,
    SymCount,
    combine_cardinality,
    combine_sigma,
    count_direct,
    count_equal_radius,
    count_linear_total,
    middle_filter,
    side_count,
    sigma_of_H,
)
from treelist.treeenum import TreeEnumerator, _copies, equal_radius_set
from treelist.halftrees import catalog
from treelist.graphcore import rooted_path


def placements_brute(k: int, slots: int) -> int:
    return sum(1 for t in itertools.product(range(slots), repeat=k) if list(t) == sorted(t))


@pytest.mark.parametrize("k, n, expected", [(0, 0, 0), (1, 4, 4), (2, 2, 3)])
def test_G_examples(k, n, expected):
    assert G(k, n) == expected


@pytest.mark.parametrize("k, n", list(itertools.product(range(7), range(7))))
def test_G_counts_placements(k, n):
    if (k, n) == (0, 0):
        # the recurrence's base case, not an empty placement count
        assert G(0, 0) == 0
    else:
        assert G(k, n) == placements_brute(k, n) == multichoose(n, k)


@pytest.mark.parametrize("x, y, z, expected", [(1, 0, 3, 3), (1, 1, 3, 6), (0, 0, 3, 1)])
def test_F_examples(x, y, z, expected):
    assert F(x, y, z) == expected


@pytest.mark.parametrize(
    "k, r, n, expected",
    [(2, 1, 6, 6), (1, 1, 5, 2), (1, 2, 6, 1), (1, 2, 5, 1), (1, 3, 5, 0)],
)
def test_count_equal_radius_examples(k, r, n, expected):
    assert count_equal_radius(k, r, n) == expected


def _equal_paths(r: int):
    def accept(t, root, members):
        return len(members) == r and is_rooted_path(t, root, members)

    return accept


@pytest.mark.parametrize(
    "k, r, n",
    [(k, r, n) for k in range(1, 4) for r in range(1, 3) for n in range(3, 9) if n + k * r <= 10],
)
def test_count_equal_radius_against_brute_force(k, r, n):
    assert count_equal_radius(k, r, n) == count_decorated(n + k * r, n, _equal_paths(r))


@pytest.mark.parametrize("k, n, expected", [(2, 6, 6), (1, 4, 1), (1, 5, 2)])
def test_count_direct_examples(k, n, expected):
    assert count_direct(k, n) == expected == count_equal_radius(k, 1, n)


@pytest.mark.parametrize(
    "s, t, expected",
    [
        (SymCount(1, 1), SymCount(0, 1), 3),
        (SymCount(1, 0), SymCount(1, 0), 1),
        (SymCount(0, 2), SymCount(0, 3), 12),
    ],
)
def test_combine_cardinality_examples(s, t, expected):
    assert combine_cardinality(s, t) == expected


@pytest.mark.parametrize(
    "s, t, expected",
    [
        (SymCount(1, 1), SymCount(1, 1), SymCount(1, 4)),
        (SymCount(0, 1), SymCount(1, 0), SymCount(0, 1)),
        (SymCount(2, 0), SymCount(3, 0), SymCount(6, 0)),
    ],
)
def test_combine_sigma_examples(s, t, expected):
    assert combine_sigma(s, t) == expected


tallies = st.builds(SymCount, st.integers(0, 50), st.integers(0, 50))


@given(tallies, tallies)
def test_combine_is_commutative(s, t):
    assert combine_sigma(s, t) == combine_sigma(t, s)


@given(tallies, tallies, tallies)
def test_combine_is_associative(s, t, u):
    assert combine_sigma(combine_sigma(s, t), u) == combine_sigma(s, combine_sigma(t, u))


@given(tallies)
def test_symmetric_singleton_is_identity(s):
    assert combine_sigma(s, UNIT) == s == combine_sigma(UNIT, s)


def test_symcount_rejects_negative():
    with pytest.raises(ValueError):
        SymCount(-1, 0)


@pytest.mark.parametrize("k, r, n, expected", [(3, 1, 6, 0), (2, 1, 6, 2), (2, 2, 6, 1)])
def test_sigma_of_H_examples(k, r, n, expected):
    assert sigma_of_H(k, r, n) == expected


@pytest.mark.parametrize("k, r, n", [(k, r, n) for k in range(1, 5) for r in range(1, 4) for n in range(3, 11)])
def test_side_tally_matches_generated_classification(k, r, n):
    a = catalog().index_of(rooted_path(r))
    generated = TreeEnumerator().sides(_copies(a, k), n // 2)
    symmetric = sum(1 for d in generated.members if d.left_half.code == d.right_half.code)
    assert side_count(k, r, n) == SymCount(symmetric, len(generated) - symmetric)
    assert sigma_of_H(k, r, n) == symmetric
    if n % 2 == 0:
        assert len(generated) == count_equal_radius(k, r, n)


@pytest.mark.parametrize("parts, n, expected", [({1, 2}, 5, True), ({3}, 5, False), (set(), 7, True)])
def test_middle_filter_examples(parts, n, expected):
    assert middle_filter(parts, n) is expected


@pytest.mark.parametrize("k, n, expected", [(2, 6, 7), (1, 5, 2), (0, 4, 1)])
def test_count_linear_total_examples(k, n, expected):
    assert count_linear_total(k, n) == expected


def _any_paths(t, root, members):
    return is_rooted_path(t, root, members)


@pytest.mark.parametrize("k, n", [(k, n) for k in range(0, 6) for n in range(3, 9) if n + k <= 10])
def test_count_linear_total_against_brute_force(k, n):
    assert count_linear_total(k, n) == count_decorated(n + k, n, _any_paths)


@pytest.mark.parametrize("k, r, n", [(1, 9, 4), (3, 2, 4), (2, 3, 5)])
def test_no_legal_slot_gives_zero(k, r, n):
    assert count_equal_radius(k, r, n) == 0 == len(equal_radius_set(k, r, n))


def test_counters_use_big_integers():
    assert G(30, 40) == comb(69, 30)
    assert G(30, 40) > 2**63
