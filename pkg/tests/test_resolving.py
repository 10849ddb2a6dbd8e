from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from supertokens.graphs import (
    SizeCapError,
    complete_graph,
    connected_graphs,
    cycle_graph,
    distance_matrix,
    path_graph,
)
from supertokens.resolving import (
    SearchExhausted,
    SingularMatrixError,
    canonical_landmarks,
    check_inequality_kn,
    colex_subsets,
    feasibility,
    inverse_complete_distance,
    inverse_matrix,
    is_resolving,
    metric_dimension,
    position_via_matrix,
    positions,
    verify_supertoken_dim_bound,
)
from supertokens.supertoken import build_supertoken, enumerate_configs


def _brute_dimension(g):
    for size in range(1, g.n):
        for sub in combinations(range(1, g.n + 1), size):
            if is_resolving(g, sub):
                return size, list(sub)
    return g.n - 1, list(range(1, g.n))


def test_positions_and_resolving():
    c6 = cycle_graph(6)
    assert positions(c6, [1])[1] == (1,)
    assert not is_resolving(c6, [1])
    assert is_resolving(c6, [1, 2])
    assert is_resolving(path_graph(5), [1])
    with pytest.raises(ValueError):
        is_resolving(c6, [])
    with pytest.raises(ValueError):
        is_resolving(c6, [1, 1])


def test_colex_order():
    assert list(colex_subsets(4, 2)) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]


def test_known_dimensions():
    assert metric_dimension(path_graph(7)) == (1, [1])
    assert metric_dimension(cycle_graph(5))[0] == 2
    assert metric_dimension(complete_graph(5)) == (4, [1, 2, 3, 4])
    assert metric_dimension(complete_graph(1)) == (0, [])


def test_search_limits():
    with pytest.raises(SizeCapError):
        metric_dimension(path_graph(30))
    with pytest.raises(SearchExhausted) as info:
        metric_dimension(complete_graph(6), max_size=3)
    assert info.value.lower_bound == 4


def test_search_matches_colex_brute_force():
    # the first resolving set in colex order equals the witness returned
    for n in range(2, 6):
        for g in connected_graphs(n):
            dim, wit = metric_dimension(g)
            assert dim == _brute_dimension(g)[0]
            first = next(
                s for s in colex_subsets(n, dim) if is_resolving(g, [v + 1 for v in s])
            )
            assert wit == [v + 1 for v in first]


def test_f2_c5_dimension():
    st_ = build_supertoken(cycle_graph(5), 2)
    dim, wit = metric_dimension(st_.graph)
    assert dim == 3
    assert not any(is_resolving(st_.graph, s) for s in combinations(range(1, 16), 2))
    assert is_resolving(st_.graph, wit)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 7), st.data())
def test_supersets_of_resolving_sets_resolve(n, data):
    g = cycle_graph(n)
    base = data.draw(st.lists(st.integers(1, n), min_size=1, max_size=n, unique=True))
    extra = data.draw(st.lists(st.integers(1, n), max_size=n, unique=True))
    bigger = sorted(set(base) | set(extra))
    if is_resolving(g, base):
        assert is_resolving(g, bigger)


def test_canonical_landmarks_and_products():
    assert canonical_landmarks(3, 2) == [(2, 0, 0), (0, 2, 0), (0, 0, 2)]
    d = distance_matrix(cycle_graph(5))
    assert position_via_matrix((1, 1, 0, 0, 0), d) == (1, 1, 3, 4, 3)
    with pytest.raises(ValueError):
        position_via_matrix((1, 1), d)


def test_inverse_matrix():
    for n in range(2, 7):
        d = distance_matrix(complete_graph(n))
        inv = inverse_matrix(d)
        assert inv == inverse_complete_distance(n)
        prod = [[sum(d[i][t] * inv[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        assert prod == [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    with pytest.raises(SingularMatrixError):
        inverse_matrix(distance_matrix(cycle_graph(4)))


def test_feasibility_examples():
    k3 = complete_graph(3)
    ok = feasibility((2, 4, 4), k3, 5)
    assert ok.feasible and ok.config == (3, 1, 1)
    bad = feasibility((1, 3, 3), k3, 5)
    assert not bad.feasible and bad.config is None
    assert bad.witness == (Fraction(5, 2), Fraction(1, 2), Fraction(1, 2))
    with pytest.raises(SingularMatrixError):
        feasibility((0,) * 6, cycle_graph(6), 1)
    with pytest.raises(ValueError):
        feasibility((1, 2), k3, 1)


@pytest.mark.parametrize("g", [complete_graph(4), path_graph(4), cycle_graph(5)], ids=["K4", "P4", "C5"])
def test_feasibility_round_trip(g):
    d = distance_matrix(g)
    for k in range(1, 4):
        for x in enumerate_configs(g.n, k):
            res = feasibility(position_via_matrix(x, d), g, k)
            assert res.feasible and res.config == x


def test_dim_bound_reports():
    rep = verify_supertoken_dim_bound(cycle_graph(5), 2)
    assert rep.canonical_resolves and rep.reduced_resolves and rep.sums_constant
    assert rep.matrix_agrees_with_bfs and rep.bound == 4 and rep.row_sum == 6
    rep = verify_supertoken_dim_bound(cycle_graph(6), 2)
    assert rep.singular and not rep.canonical_resolves and rep.bound is None
    assert ["100100", "010010", "001001"] in rep.collisions
    rep = verify_supertoken_dim_bound(path_graph(4), 3)
    assert rep.canonical_resolves and not rep.degree_regular and rep.bound == 4


def test_inequality():
    assert check_inequality_kn(5, 4) and not check_inequality_kn(5, 5)
    with pytest.raises(ValueError):
        check_inequality_kn(2, 3)
