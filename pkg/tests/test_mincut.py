import io
import random

import pytest
from hypothesis import given, settings, strategies as st

from dynnmc import (DegenerateInputError, DisconnectedError, DynamicNmc, Multigraph,
                    SizeLimitError, SparsifierParams, enumerate_min_cuts, min_cut_exact,
                    min_cut_report, min_cuts_of_graph)
from dynnmc.oracles import oracle_min_cut_family
from dynnmc.workloads import erdos_renyi

from conftest import complete, cycle, two_k4s, two_triangles_bridge


def test_exact_examples():
    assert min_cut_exact(Multigraph(6, two_triangles_bridge()))[0] == 1
    assert min_cut_exact(Multigraph(4, complete(4)))[0] == 3
    assert min_cut_exact(Multigraph(2, [(0, 1)] * 5)) == (5, [1])


def test_exact_errors():
    with pytest.raises(DegenerateInputError):
        min_cut_exact(Multigraph(1))
    with pytest.raises(DisconnectedError):
        min_cut_exact(Multigraph(4, [(0, 1), (2, 3)]))


def test_enumerate_c4():
    fam = enumerate_min_cuts(Multigraph(4, cycle(4)))
    assert fam.value == 2 and len(fam) == 6
    assert len(fam.nontrivial()) == 2
    assert {(1, 2), (2, 3)} <= fam.sides()


def test_enumerate_k4_and_tree():
    fam = enumerate_min_cuts(Multigraph(4, complete(4)))
    assert fam.value == 3 and len(fam) == 4 and not fam.nontrivial()
    tree = [(0, 1), (1, 2), (1, 3), (3, 4)]
    fam = enumerate_min_cuts(Multigraph(5, tree))
    assert fam.value == 1 and len(fam) == len(tree)


def test_enumerate_limit():
    with pytest.raises(SizeLimitError):
        enumerate_min_cuts(Multigraph(21, cycle(21)))


def test_family_write():
    fam = enumerate_min_cuts(Multigraph(3, [(0, 1), (1, 2)]))
    buf = io.StringIO()
    fam.write(buf)
    assert buf.getvalue().splitlines()[0] == "mincuts value 1 count 2"


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_enumeration_matches_oracle(seed):
    rnd = random.Random(seed)
    n = rnd.randint(2, 10)
    edges = [tuple(rnd.sample(range(n), 2)) for _ in range(rnd.randint(n, 3 * n))]
    h = Multigraph(n, edges)
    if not h.is_connected():
        return
    fam = enumerate_min_cuts(h)
    ref = oracle_min_cut_family(n, edges)
    assert fam.value == ref.value == min_cut_exact(h)[0]
    assert fam.sides() == ref.sides()


def test_graph_family_lambda_below_delta():
    e = DynamicNmc(8, two_k4s())
    fam = min_cuts_of_graph(e, SparsifierParams(seed=1))
    assert fam.value == 2
    assert fam.sides() == {(4, 5, 6, 7)}


def test_graph_family_k4_and_c5():
    fam = min_cuts_of_graph(DynamicNmc(4, complete(4)))
    assert fam.value == 3 and fam.sides() == {(0,), (1,), (2,), (3,)}
    fam = min_cuts_of_graph(DynamicNmc(5, cycle(5)))
    assert fam.value == 2
    trivial = {c.side for c in fam.cuts if c.trivial}
    assert trivial == {(v,) for v in range(5)}


def test_graph_queries_need_connected_graph():
    with pytest.raises(DisconnectedError):
        min_cuts_of_graph(DynamicNmc(4, [(0, 1), (2, 3)]))
    with pytest.raises(DegenerateInputError):
        min_cut_report(DynamicNmc(1))


def test_report_examples():
    value, cut = min_cut_report(DynamicNmc(6, two_triangles_bridge()))
    assert value == 1 and cut.side == (3, 4, 5) and cut.crossing == (6,)
    value, cut = min_cut_report(DynamicNmc(4, complete(4)))
    assert value == 3 and len(cut.side) == 1


def test_report_value_on_random_graphs():
    good = 0
    for seed in range(100):
        rnd = random.Random(seed)
        n = rnd.randint(8, 16)
        edges = erdos_renyi(n, rnd, p=rnd.uniform(0.25, 0.6))
        ref = oracle_min_cut_family(n, edges)
        e = DynamicNmc(n, edges)
        if len(e.graph.components()) != 1:
            good += 1
            continue
        before = e.snapshot()
        value, cut = min_cut_report(e, SparsifierParams(seed=seed))
        assert e.snapshot() == before
        assert len(cut.crossing) == value
        good += value == ref.value
    assert good >= 95
