from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from supertokens.assignment import Assignment, brute_force_assignment, solve_assignment

from oracles import min_assignment

square = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 9), min_size=n, max_size=n), min_size=n, max_size=n)
)


def test_worked_example():
    cost = [[2, 2, 2], [1, 3, 3], [1, 1, 1]]
    a = solve_assignment(cost)
    assert a.total_weight == 4
    assert a.permutation == (1, 0, 2)
    assert a == brute_force_assignment(cost)


def test_empty_and_singleton():
    assert solve_assignment([]) == Assignment((), 0)
    assert solve_assignment([[7]]) == Assignment((0,), 7)


@pytest.mark.parametrize("bad", [[[1, 2]], [[1, -1], [0, 0]], [[1.5, 0], [0, 0]]])
def test_rejects_invalid(bad):
    with pytest.raises(ValueError):
        solve_assignment(bad)


def test_ties_break_lexicographically():
    # all permutations cost 0; the lexicographically first is the identity
    assert solve_assignment([[0] * 4 for _ in range(4)]).permutation == (0, 1, 2, 3)
    assert solve_assignment([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).permutation == (1, 2, 0)


def test_random_agreement_with_brute_force():
    rng = random.Random(7)
    for _ in range(2000):
        n = rng.randint(1, 6)
        cost = [[rng.randint(0, 5) for _ in range(n)] for _ in range(n)]
        fast, slow = solve_assignment(cost), brute_force_assignment(cost)
        assert fast == slow
        assert fast.total_weight == min_assignment(cost)


@settings(max_examples=200, deadline=None)
@given(square)
def test_indicator_is_feasible_lp_point(cost):
    a = solve_assignment(cost)
    x = a.indicator()
    n = len(cost)
    assert all(sum(row) == 1 for row in x)
    assert all(sum(x[i][j] for i in range(n)) == 1 for j in range(n))
    assert sum(cost[i][j] * x[i][j] for i in range(n) for j in range(n)) == a.total_weight


@settings(max_examples=200, deadline=None)
@given(square, st.integers(0, 5), st.integers(0, 10))
def test_row_shift_keeps_optimum(cost, row, shift):
    row %= len(cost)
    shifted = [[w + shift if i == row else w for w in r] for i, r in enumerate(cost)]
    assert solve_assignment(shifted).total_weight == solve_assignment(cost).total_weight + shift


@settings(max_examples=200, deadline=None)
@given(square, st.randoms(use_true_random=False))
def test_permuting_rows_keeps_weight(cost, rnd):
    rows = list(range(len(cost)))
    rnd.shuffle(rows)
    assert solve_assignment([cost[i] for i in rows]).total_weight == solve_assignment(cost).total_weight


def test_brute_force_cap():
    with pytest.raises(ValueError):
        brute_force_assignment([[0] * 10 for _ in range(10)])
