import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from dynnmc import (DuplicateEdgeError, DynamicSimpleGraph, Edge, EmptyAdjacencyError,
                    GraphError, SelfLoopError, UnknownEdgeError)
from dynnmc.oracles import oracle_components

from conftest import chi2_limit, chi2_stat


def test_first_insert_gets_id_zero():
    g = DynamicSimpleGraph(3)
    assert g.insert_edge(0, 1) == 0
    assert g.degree(0) == g.degree(1) == 1
    assert g.degree(2) == 0


def test_duplicate_and_loop_rejected():
    g = DynamicSimpleGraph(3)
    g.insert_edge(0, 1)
    with pytest.raises(DuplicateEdgeError):
        g.insert_edge(1, 0)
    with pytest.raises(SelfLoopError):
        g.insert_edge(2, 2)
    with pytest.raises(GraphError):
        g.insert_edge(0, 7)


def test_delete_returns_edge_and_rejects_repeat():
    g = DynamicSimpleGraph(2)
    g.insert_edge(0, 1)
    assert g.delete_edge(0) == Edge(0, 0, 1)
    assert g.m == 0
    with pytest.raises(UnknownEdgeError):
        g.delete_edge(0)


def test_delete_updates_degrees():
    g = DynamicSimpleGraph.from_edges(3, [(0, 1), (1, 2)])
    g.delete_edge(g.find_edge(1, 2))
    assert (g.degree(1), g.degree(2)) == (1, 0)


def test_ids_are_never_reissued():
    g = DynamicSimpleGraph(3)
    a = g.insert_edge(0, 1)
    g.delete_edge(a)
    assert g.insert_edge(0, 1) == a + 1


def test_restore_keeps_id():
    g = DynamicSimpleGraph.from_edges(3, [(0, 1), (1, 2)])
    e = g.delete_edge(0)
    g.restore_edge(e.id, e.u, e.v)
    assert g.find_edge(0, 1) == 0
    with pytest.raises(GraphError):
        g.restore_edge(9, 0, 2)


@pytest.mark.parametrize("edges,n,expect", [
    ([(0, 1), (1, 2), (0, 2)], 3, 2),
    ([(0, 1), (1, 2)], 3, 1),
    ([], 5, 0),
])
def test_min_degree(edges, n, expect):
    assert DynamicSimpleGraph.from_edges(n, edges).min_degree() == expect


def test_sample_degree_one_and_isolated():
    g = DynamicSimpleGraph.from_edges(3, [(0, 1)])
    r = random.Random(1)
    assert all(g.sample_incident_edge(0, r) == 0 for _ in range(50))
    with pytest.raises(EmptyAdjacencyError):
        g.sample_incident_edge(2, r)


def test_sample_degree_three_uniform():
    g = DynamicSimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    r = random.Random(7)
    draws = 30000
    c = Counter(g.sample_incident_edge(0, r) for _ in range(draws))
    assert set(c) == {0, 1, 2}
    assert chi2_stat(c.values(), draws / 3) < chi2_limit(3)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 12), st.lists(st.tuples(st.booleans(), st.integers(0, 11), st.integers(0, 11)),
                                    max_size=80))
def test_random_updates_match_edge_set(n, ops):
    g = DynamicSimpleGraph(n)
    live: dict[tuple[int, int], int] = {}
    for ins, a, b in ops:
        a, b = a % n, b % n
        if a == b:
            continue
        key = (min(a, b), max(a, b))
        if ins and key not in live:
            live[key] = g.insert_edge(a, b)
        elif not ins and key in live:
            g.delete_edge(live.pop(key))
    g.audit()
    assert sorted(g.edge_list()) == sorted(live)
    for v in range(n):
        assert g.degree(v) == sum(v in k for k in live)
        assert sorted(g.neighbors(v)) == sorted(x for k in live if v in k for x in k if x != v)
    assert [tuple(c) for c in g.components()] == sorted(oracle_components(n, list(live)))
