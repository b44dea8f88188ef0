"""From-scratch construction of a non-trivial-minimum-cut (NMC) sparsifier.

A query draws ``q`` random 2-out contractions of the current graph, builds a
``(delta+1)``-forest decomposition of each one through the DCS, lets the
edges vote, and contracts every edge that was kept by fewer than ``r`` of
the decompositions. The contraction itself is assembled through the DSF,
touching only edges that received enough votes. Both structures are left
holding the same graph (and, for the DCS, the same empty forest) as before.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence, TextIO

from .dsu import DSU
from .errors import DegenerateInputError
from .forests import DcsStructure, DsfStructure
from .graph import DynamicSimpleGraph
from .multigraph import Multigraph


@dataclass
class SparsifierParams:
    c1: float = 24.0
    c2: float = 0.005
    seed: int = 0
    q: Optional[int] = None
    r: Optional[int] = None

    def resolve(self, n: int) -> tuple[int, int]:
        """Number of contractions and vote threshold for an n-vertex graph."""
        q = self.q if self.q is not None else max(1, math.ceil(self.c1 * math.log(max(n, 1))))
        r = self.r if self.r is not None else math.ceil(self.c2 * q)
        r = min(q, max(1, r))
        return q, r


class ContractionPlan(NamedTuple):
    edges: tuple[int, ...]


class KForest(NamedTuple):
    edges: list[int]
    rounds: list[list[int]]
    n_super: int


class MembershipOracle:
    """Vote counts per edge id; an edge is a member once it has ``r`` votes."""

    def __init__(self, counts: dict[int, int], r: int) -> None:
        self.counts = counts
        self.r = r
        self.lookups = 0

    def count(self, eid: int) -> int:
        return self.counts.get(eid, 0)

    def member(self, eid: int) -> bool:
        self.lookups += 1
        return self.counts.get(eid, 0) >= self.r

    def check_set(self) -> list[int]:
        return sorted(e for e, c in self.counts.items() if c >= self.r)


class SparsifierOutput:
    """Contracted multigraph of one component plus the maps back to the graph.

    ``supernode[v]`` is the supernode of vertex v (for the vertices of the
    component), ``edges[i]`` a supernode pair and ``edge_ids[i]`` the graph
    edge it came from.
    """

    def __init__(self, vertices: list[int], supernode: dict[int, int], n_super: int,
                 edges: list[tuple[int, int]], edge_ids: list[int],
                 oracle: MembershipOracle, stats: dict) -> None:
        self.vertices = vertices
        self.supernode = supernode
        self.n_super = n_super
        self.edges = edges
        self.edge_ids = edge_ids
        self.oracle = oracle
        self.stats = stats

    @property
    def m(self) -> int:
        return len(self.edges)

    def members(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n_super)]
        for v in self.vertices:
            out[self.supernode[v]].append(v)
        return out

    def multigraph(self) -> Multigraph:
        return Multigraph(self.n_super, self.edges, self.edge_ids)

    def plan(self, graph: DynamicSimpleGraph) -> ContractionPlan:
        """The contracted edge set: component edges short of the vote threshold."""
        inside = set(self.vertices)
        return ContractionPlan(tuple(sorted(
            e.id for e in graph.edges.values()
            if e.u in inside and not self.oracle.member(e.id))))

    def expand(self, side: Iterable[int]) -> list[int]:
        """Graph vertices of the supernodes in ``side``."""
        s = set(side)
        return sorted(v for v in self.vertices if self.supernode[v] in s)

    def write(self, fh: TextIO) -> None:
        fh.write(f"supernodes {self.n_super}\n")
        for i, mem in enumerate(self.members()):
            fh.write(f"s {i} " + " ".join(map(str, mem)) + "\n")
        fh.write(f"edges {self.m}\n")
        for (a, b), eid in sorted(zip(self.edges, self.edge_ids), key=lambda t: t[1]):
            fh.write(f"e {a} {b} {eid}\n")


def sample_two_out(graph: DynamicSimpleGraph, vertices: Iterable[int],
                   rng: random.Random) -> ContractionPlan:
    """Two uniform incident edges per vertex, with repetition, deduplicated."""
    seen: dict[int, None] = {}
    draw = graph.sample_incident_edge
    for v in vertices:
        seen[draw(v, rng)] = None
        seen[draw(v, rng)] = None
    return ContractionPlan(tuple(seen))


def k_forest_of_contraction(dcs: DcsStructure, plan: ContractionPlan, k: int,
                            vertices: Iterable[int]) -> KForest:
    """k successive spanning forests of the graph with ``plan`` contracted.

    ``vertices`` must be closed under the plan's edges (a union of
    components). The DCS comes back with the same graph and an empty forest.
    """
    assert dcs.F_size() == 0, "DCS forest must be empty"
    dsu = DSU(dcs.n)
    forest = []
    for eid in plan.edges:
        e = dcs.edge(eid)
        if dsu.union(e.u, e.v):
            dcs.insert_F(eid, apart=True)
            forest.append(eid)
    reps = []
    seen_roots = set()
    for v in vertices:
        root = dsu.find(v)
        if root not in seen_roots:
            seen_roots.add(root)
            reps.append(v)
    removed = []
    rounds = []
    for _ in range(k):
        round_edges = []
        for v in reps:
            e = dcs.find_cutedge(v)
            while e is not None:
                dcs.insert_F(e.id, apart=True)
                round_edges.append(e.id)
                e = dcs.find_cutedge(v)
        for eid in round_edges:
            removed.append(dcs.delete_G(eid))
        rounds.append(round_edges)
    for eid in forest:
        dcs.delete_F(eid)
    for e in removed:
        dcs.insert_G(e.u, e.v, e.id)
    return KForest([e.id for e in removed], rounds, len(reps))


def _forest_edges_of(dsf: DsfStructure, vertices: Sequence[int]) -> list[int]:
    fet = dsf.dcs.fet
    seen = set()
    out = []
    for v in vertices:
        if v in seen:
            continue
        seen.update(fet.tree_vertices(v))
        out.extend(sorted(h.data for h in fet.tree_edges(v)))
    return out


def build_contraction(dsf: DsfStructure, oracle: MembershipOracle,
                      vertices: Sequence[int]) -> SparsifierOutput:
    """Contract every edge that fails ``oracle`` among ``vertices`` (a union of components)."""
    stack = _forest_edges_of(dsf, vertices)
    candidates = []
    fixed = []
    pops = 0
    while stack:
        eid = stack.pop()
        pops += 1
        if oracle.member(eid):
            candidates.append(dsf.edge(eid))
            r = dsf.delete(eid)
            if r is not None:
                stack.append(r.id)
        else:
            fixed.append(dsf.edge(eid))
    adj: dict[int, list[int]] = {}
    for e in fixed:
        adj.setdefault(e.u, []).append(e.v)
        adj.setdefault(e.v, []).append(e.u)
    supernode: dict[int, int] = {}
    label = 0
    for s in sorted(vertices):
        if s in supernode:
            continue
        supernode[s] = label
        stack2 = [s]
        while stack2:
            x = stack2.pop()
            for y in adj.get(x, ()):
                if y not in supernode:
                    supernode[y] = label
                    stack2.append(y)
        label += 1
    edges = []
    edge_ids = []
    for e in candidates:
        a, b = supernode[e.u], supernode[e.v]
        if a != b:
            edges.append((a, b) if a < b else (b, a))
            edge_ids.append(e.id)
    for e in candidates:
        dsf.insert(e.u, e.v, e.id)
    stats = {"pops": pops, "candidates": len(candidates), "fixed": len(fixed)}
    return SparsifierOutput(sorted(vertices), supernode, label, edges, edge_ids, oracle, stats)


def sparsify_vertices(graph: DynamicSimpleGraph, dcs: DcsStructure, dsf: DsfStructure,
                      vertices: Sequence[int], params: SparsifierParams,
                      rng: random.Random) -> SparsifierOutput:
    """The whole pipeline on a union of components with minimum degree >= 1."""
    vertices = list(vertices)
    if not vertices:
        raise DegenerateInputError("no vertices to sparsify")
    delta = graph.min_degree(vertices)
    if delta == 0:
        raise DegenerateInputError("an isolated vertex has no incident edge to sample")
    q, r = params.resolve(len(vertices))
    k = delta + 1
    dcs0 = dcs.counters.dcs_ops
    dsf0 = dsf.counters.dsf_ops
    counts: dict[int, int] = {}
    supers = []
    for _ in range(q):
        plan = sample_two_out(graph, vertices, rng)
        kf = k_forest_of_contraction(dcs, plan, k, vertices)
        supers.append(kf.n_super)
        for eid in kf.edges:
            counts[eid] = counts.get(eid, 0) + 1
    oracle = MembershipOracle(counts, r)
    out = build_contraction(dsf, oracle, vertices)
    out.stats.update({
        "q": q, "r": r, "k": k, "delta": delta,
        "check": len(oracle.check_set()),
        "two_out_supernodes": supers,
        "dcs_ops": dcs.counters.dcs_ops - dcs0,
        "dsf_ops": dsf.counters.dsf_ops - dsf0,
    })
    return out


def build_nmc_sparsifier(engine, params: Optional[SparsifierParams] = None) -> SparsifierOutput:
    """NMC sparsifier of the whole graph held by ``engine`` (a DynamicNmc)."""
    params = params or SparsifierParams()
    if engine.n == 0:
        raise DegenerateInputError("empty graph")
    rng = random.Random(params.seed)
    return sparsify_vertices(engine.graph, engine.dcs, engine.dsf,
                             range(engine.n), params, rng)


def build_nmc_per_component(engine, params: Optional[SparsifierParams] = None,
                            components: Optional[list[list[int]]] = None) -> list[SparsifierOutput]:
    """One sparsifier per connected component; isolated vertices stay singletons."""
    params = params or SparsifierParams()
    rng = random.Random(params.seed)
    comps = components if components is not None else engine.graph.components()
    out = []
    for comp in comps:
        if len(comp) == 1:
            out.append(SparsifierOutput(list(comp), {comp[0]: 0}, 1, [], [],
                                        MembershipOracle({}, 1), {}))
            continue
        out.append(sparsify_vertices(engine.graph, engine.dcs, engine.dsf,
                                     comp, params, rng))
    return out
