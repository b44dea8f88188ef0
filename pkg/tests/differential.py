"""Random-operation drivers shared by unit and acceptance tests."""

import random

from dynnmc import DcsStructure, DsfStructure
from dynnmc.oracles import oracle_components, oracle_msf


def _where(n, edges):
    return {x: c for c in oracle_components(n, edges) for x in c}


def check_dcs_state(dcs, n, g, f):
    """Oracle comparison of one DCS state; ``g`` maps id -> (u, v), ``f`` is a set of ids."""
    comps = oracle_components(n, [g[e] for e in f])
    for c in comps:
        assert sorted(dcs.fet.tree_vertices(c[0])) == list(c)
    edges = list(dcs.msf.edges())
    assert sorted(e.id for e in edges) == sorted(g)
    assert all(e.w in (0, 1) for e in edges)
    assert {e.id for e in edges if e.w == 0} == set(f)
    et0 = dcs.msf.et[0]
    for c in comps:
        assert all(et0.same_tree(c[0], x) for x in c[1:])
    weight, _ = oracle_msf([(e.id, e.u, e.v, e.w) for e in edges])
    assert dcs.msf.forest_weight() == weight


def check_cutedge(dcs, v, n, g, f):
    tree = set(_where(n, [g[e] for e in f])[v])
    leaving = {eid for eid, (a, b) in g.items() if (a in tree) != (b in tree)}
    got = dcs.find_cutedge(v)
    if leaving:
        assert got is not None and got.id in leaving
    else:
        assert got is None


def run_dcs(n, ops, seed, audit_every=1, max_edges=None):
    """Mixed DCS operations with an oracle check after each one.

    Every step also probes find_cutedge at a random vertex. The full
    structural audit runs every ``audit_every`` steps.
    """
    max_edges = max_edges if max_edges is not None else 3 * n
    rnd = random.Random(seed)
    dcs = DcsStructure(n)
    g: dict[int, tuple[int, int]] = {}
    pairs: dict[tuple[int, int], int] = {}
    f: set[int] = set()
    nxt = 0
    for step in range(ops):
        op = rnd.random()
        if op < 0.35 and len(g) >= max_edges:
            op = 0.4
        if op < 0.35 or not g:
            u, v = rnd.sample(range(n), 2)
            key = (min(u, v), max(u, v))
            if key in pairs:
                continue
            dcs.insert_G(u, v, nxt)
            g[nxt] = key
            pairs[key] = nxt
            nxt += 1
        elif op < 0.55:
            eid = rnd.choice(list(g))
            dcs.delete_G(eid)
            del pairs[g.pop(eid)]
            f.discard(eid)
        elif op < 0.75:
            eid = rnd.choice(list(g))
            a, b = g[eid]
            apart = eid not in f and b not in _where(n, [g[e] for e in f])[a]
            assert dcs.insert_F(eid) == apart
            if apart:
                f.add(eid)
        elif op < 0.85:
            eid = rnd.choice(list(g))
            assert dcs.delete_F(eid) == (eid in f)
            f.discard(eid)
        else:
            check_cutedge(dcs, rnd.randrange(n), n, g, f)
        check_dcs_state(dcs, n, g, f)
        check_cutedge(dcs, rnd.randrange(n), n, g, f)
        if step % audit_every == 0:
            dcs.audit()
    return dcs


def run_dsf(n, ops, seed):
    rnd = random.Random(seed)
    dsf = DsfStructure(n)
    g: dict[int, tuple[int, int]] = {}
    pairs: dict[tuple[int, int], int] = {}
    nxt = 0
    for _ in range(ops):
        if (rnd.random() < 0.55 and len(g) < 3 * n) or not g:
            u, v = rnd.sample(range(n), 2)
            key = (min(u, v), max(u, v))
            if key in pairs:
                continue
            dsf.insert(u, v, nxt)
            g[nxt] = key
            pairs[key] = nxt
            nxt += 1
        else:
            eid = rnd.choice(list(g))
            was = dsf.is_forest_edge(eid)
            r = dsf.delete(eid)
            del pairs[g.pop(eid)]
            if not was:
                assert r is None
        comps = tuple(sorted(oracle_components(n, list(g.values()))))
        assert dsf.components() == comps
        forest = [g[e] for e in dsf.forest_edges()]
        assert len(forest) == n - len(comps)
        assert tuple(sorted(oracle_components(n, forest))) == comps
    dsf.audit()
    return dsf


# -- sparsifier checks -------------------------------------------------------

def contraction_matches_plan(engine, out):
    """Ĝ equals the naive contraction of the component by the plan's edges."""
    from dynnmc.oracles import oracle_contraction

    inside = set(out.vertices)
    rows = [(e.id, e.u, e.v) for e in engine.graph.edges.values() if e.u in inside]
    index = {v: i for i, v in enumerate(out.vertices)}
    local = [(eid, index[u], index[v]) for eid, u, v in rows]
    plan = out.plan(engine.graph)
    groups, kept = oracle_contraction(len(out.vertices), local, plan.edges)
    back = out.vertices
    groups = {tuple(back[i] for i in grp) for grp in groups}
    members = [tuple(m) for m in out.members()]
    if set(members) != groups or len(members) != len(groups):
        return False
    got = {}
    for (a, b), eid in zip(out.edges, out.edge_ids):
        got[eid] = tuple(sorted((members[a], members[b])))
    want = {eid: tuple(sorted(tuple(back[i] for i in grp) for grp in pair))
            for eid, pair in kept.items()}
    return got == want


def nmc_preserved(engine, out, family):
    """Every non-trivial minimum cut of G survives in Ĝ with the same value."""
    preserved = set(out.edge_ids)
    h = out.multigraph()
    for cut in family.nontrivial():
        if not set(cut.crossing) <= preserved:
            return False
        sn = {out.supernode[v] for v in cut.side}
        if any(out.supernode[v] in sn for v in out.vertices if v not in set(cut.side)):
            return False
        if len(h.crossing(sn)) != family.value:
            return False
    return True


def graph_family(engine):
    from dynnmc.oracles import oracle_min_cut_family

    edges = list(engine.graph.edges.values())
    return oracle_min_cut_family(engine.n, [(e.u, e.v) for e in edges],
                                 labels=[e.id for e in edges])


def kforest_cut_property(seed):
    """min(flow_S, k) == min(flow_H, k) over all supernode pairs of one contraction."""
    from dynnmc import DynamicNmc
    from dynnmc.oracles import oracle_contraction, oracle_edge_connectivity
    from dynnmc.sparsifier import k_forest_of_contraction, sample_two_out
    from dynnmc.workloads import erdos_renyi

    rnd = random.Random(seed)
    while True:
        n = rnd.randint(8, 16)
        e = DynamicNmc(n, erdos_renyi(n, rnd, p=rnd.uniform(0.3, 0.7)))
        if e.graph.min_degree() == 0:
            continue
        plan = sample_two_out(e.graph, range(n), rnd)
        rows = [(x.id, x.u, x.v) for x in e.graph.edges.values()]
        groups, kept = oracle_contraction(n, rows, plan.edges)
        if 2 <= len(groups) <= 12:
            break
    k = rnd.choice([2, 3, 4])
    before = e.dcs.snapshot()
    kf = k_forest_of_contraction(e.dcs, plan, k, range(n))
    e.audit()
    if e.dcs.snapshot() != before or len(kf.edges) > k * (len(groups) - 1):
        return False
    order = sorted(groups)
    gi = {g: i for i, g in enumerate(order)}
    h_edges = [(gi[a], gi[b]) for a, b in kept.values()]
    s_edges = [(gi[kept[eid][0]], gi[kept[eid][1]]) for eid in kf.edges]
    m = len(order)
    for a in range(m):
        for b in range(a + 1, m):
            fh = oracle_edge_connectivity(m, h_edges, a, b)
            fs = oracle_edge_connectivity(m, s_edges, a, b)
            if min(fh, k) != min(fs, k):
                return False
    return True
