import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graph_and_order
from oracles import brute_sreach, brute_wreach
from koebe.families import k3, path, star
from koebe.graph import PlanarGraph, ordering_from_ids
from koebe.reach import (
    is_strong_path,
    is_weak_path,
    metric_of_ordering,
    reach_size_profile,
    sreach_all,
    wreach_all,
)

A, B, C = 0, 1, 2  # path a-b-c


def test_path_examples():
    g, o = path(3), ordering_from_ids([A, B, C])
    assert wreach_all(g, o, 2).sets[C] == {A, B, C}
    assert wreach_all(g, o, 1).sets[C] == {B, C}
    assert sreach_all(g, o, 2).sets[C] == {B, C}
    assert all(wreach_all(g, o, 0).sets[v] == {v} for v in range(3))


def test_star_strong():
    g = star(4)  # centre 4
    o = ordering_from_ids([0, 1, 2, 3, 4])
    assert sreach_all(g, o, 1).sets[4] == {0, 1, 2, 3, 4}


def test_metric_examples():
    for perm in ([0, 1, 2], [2, 1, 0], [1, 0, 2]):
        assert metric_of_ordering(k3(), ordering_from_ids(perm), 1, "scol").value == 3
    assert metric_of_ordering(path(3), ordering_from_ids([B, A, C]), 1, "wcol").value == 2
    empty = PlanarGraph.from_edges(5, [])
    o = ordering_from_ids(range(5))
    for d in (0, 1, 3):
        assert metric_of_ordering(empty, o, d, "wcol").value == 1
        assert metric_of_ordering(empty, o, d, "scol").value == 1
    assert metric_of_ordering(empty, o, 2, "adm").value == 0


def test_metric_report_is_max():
    r = metric_of_ordering(path(5), ordering_from_ids([2, 0, 4, 1, 3]), 2, "wcol")
    assert r.value == max(r.values) and r.values[r.argmax] == r.value
    with pytest.raises(ValueError):
        metric_of_ordering(path(3), ordering_from_ids(range(3)), 1, "col")


@given(graph_and_order(), st.integers(0, 4))
def test_against_brute_force(go, d):
    g, o = go
    W = wreach_all(g, o, d).sets
    S = sreach_all(g, o, d).sets
    assert list(W) == brute_wreach(g, o, d)
    assert list(S) == brute_sreach(g, o, d)


@given(graph_and_order(), st.integers(0, 4))
def test_invariants(go, d):
    g, o = go
    W, W1 = wreach_all(g, o, d).sets, wreach_all(g, o, d + 1).sets
    S, S1 = sreach_all(g, o, d).sets, sreach_all(g, o, d + 1).sets
    for v in range(g.n):
        assert v in W[v] and v in S[v]
        assert all(o.rank[u] <= o.rank[v] for u in W[v])
        assert S[v] <= W[v]
        assert W[v] <= W1[v] and S[v] <= S1[v]


@given(graph_and_order(), st.integers(1, 4))
def test_profile_matches(go, d):
    g, o = go
    prof = reach_size_profile(g, o, [d, d + 2], "wcol")
    assert prof[d] == [len(s) for s in wreach_all(g, o, d).sets]
    prof = reach_size_profile(g, o, [d, d + 2], "strong")
    assert prof[d + 2] == [len(s) for s in sreach_all(g, o, d + 2).sets]


def test_path_predicates():
    g, o = path(3), ordering_from_ids([A, B, C])
    assert is_weak_path(g, o, (C, B, A), 2)
    assert not is_weak_path(g, o, (C, B, A), 1)
    assert not is_strong_path(g, o, (C, B, A), 2)
    assert is_strong_path(g, o, (C, B), 1)
