"""Maximal k-edge-connected subgraphs, found by peeling and cutting through sparsifiers."""

from __future__ import annotations

import random
from typing import Iterable, Optional, TextIO

from .dsu import DSU
from .engine import DynamicNmc
from .graph import DynamicSimpleGraph
from .mincut import min_cut_exact
from .multigraph import Multigraph
from .sparsifier import SparsifierParams, sparsify_vertices


class KSubgraphPartition:
    """Classes of the partition, each with a flag telling whether it was certified."""

    def __init__(self, k: int, classes: Iterable[Iterable[int]],
                 certified: Optional[Iterable[bool]] = None) -> None:
        self.k = k
        classes = [tuple(sorted(c)) for c in classes]
        flags = list(certified) if certified is not None else [len(c) == 1 for c in classes]
        pairs = sorted(zip(classes, flags))
        self.classes: list[tuple[int, ...]] = [c for c, _ in pairs]
        self.certified = [f for _, f in pairs]

    def __len__(self) -> int:
        return len(self.classes)

    def as_set(self) -> frozenset:
        return frozenset(self.classes)

    def __eq__(self, other) -> bool:
        if isinstance(other, KSubgraphPartition):
            return self.as_set() == other.as_set()
        return NotImplemented

    def class_of(self) -> dict[int, int]:
        return {v: i for i, c in enumerate(self.classes) for v in c}

    def write(self, fh: TextIO) -> None:
        fh.write(f"kmax k {self.k} classes {len(self.classes)}\n")
        for c, ok in zip(self.classes, self.certified):
            fh.write(f"class {'certified' if ok else 'unchecked'} " + " ".join(map(str, c)) + "\n")


def _component_of(graph: DynamicSimpleGraph, s: int, allowed: set[int]) -> list[int]:
    seen = {s}
    stack = [s]
    while stack:
        x = stack.pop()
        for y in graph.neighbors(x):
            if y in allowed and y not in seen:
                seen.add(y)
                stack.append(y)
    return sorted(seen)


def _identity_contraction(graph: DynamicSimpleGraph, comp: list[int]):
    index = {v: i for i, v in enumerate(comp)}
    edges, ids = [], []
    for v in comp:
        for eid in graph.incident(v):
            e = graph.edges[eid]
            if e.u == v:
                edges.append((index[e.u], index[e.v]))
                ids.append(eid)
    return Multigraph(len(comp), edges, ids), comp


def maximal_k_edge_connected(engine: DynamicNmc, k: int,
                             params: Optional[SparsifierParams] = None,
                             identity: bool = False, certify: bool = True) -> KSubgraphPartition:
    """Partition of the vertices into maximal k-edge-connected classes.

    Edges are deleted from ``engine`` while the search runs and restored in
    reverse order before returning. ``identity`` skips the sparsifier and
    cuts the component itself (a deterministic debug mode).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    params = params or SparsifierParams()
    rng = random.Random(params.seed)
    graph = engine.graph
    log = []
    classes: list[list[int]] = []
    work = [sorted(c) for c in graph.components()]
    try:
        while work:
            comp = work.pop()
            alive = set(comp)
            queue = [v for v in comp if graph.degree(v) < k]
            while queue:
                v = queue.pop()
                if v not in alive:
                    continue
                alive.discard(v)
                classes.append([v])
                for eid in list(graph.incident(v)):
                    e = engine.delete(eid)
                    log.append(e)
                    w = e.other(v)
                    if w in alive and graph.degree(w) < k:
                        queue.append(w)
            if not alive:
                continue
            if len(alive) < len(comp):
                left = set(alive)
                while left:
                    part = _component_of(graph, min(left), left)
                    left.difference_update(part)
                    work.append(part)
                continue
            if len(comp) == 1:
                classes.append(comp)
                continue
            if identity:
                h, back = _identity_contraction(graph, comp)
                expand = lambda side: [back[i] for i in side]  # noqa: E731
            else:
                out = sparsify_vertices(graph, engine.dcs, engine.dsf, comp, params, rng)
                h = out.multigraph()
                expand = out.expand
            value: Optional[int] = None
            if h.n >= 2:
                value, side = min_cut_exact(h)
            if value is None or value >= k:
                classes.append(comp)
                continue
            s1 = set(expand(side))
            s2 = alive - s1
            assert len(s1) >= k and len(s2) >= k, "cut side smaller than k"
            crossing = [eid for v in s1 for eid in graph.incident(v)
                        if graph.edges[eid].other(v) not in s1]
            assert len(crossing) == value, "cut value changed through the contraction"
            for eid in crossing:
                log.append(engine.delete(eid))
            work.append(sorted(s1))
            work.append(sorted(s2))
    finally:
        for e in reversed(log):
            engine.restore_edge(e.id, e.u, e.v)
    certified = []
    for c in classes:
        if len(c) == 1 or not certify:
            certified.append(len(c) == 1)
            continue
        sub, _ = Multigraph(engine.n, [(e.u, e.v) for e in graph.edges.values()]).induced(c)
        certified.append(sub.is_connected() and min_cut_exact(sub)[0] >= k)
    return KSubgraphPartition(k, classes, certified)


def multigraph_to_simple_gadget(m: Multigraph, k: int) -> tuple[DynamicSimpleGraph, list[tuple[int, ...]]]:
    """A simple graph with the same maximal k-edge-connected classes as ``m``.

    Returns the graph and, for each of its vertices, the original vertices
    it stands for.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    dsu = DSU(m.n)
    while True:
        mult: dict[tuple[int, int], int] = {}
        for a, b in m.edges:
            ra, rb = dsu.find(a), dsu.find(b)
            if ra != rb:
                key = (ra, rb) if ra < rb else (rb, ra)
                mult[key] = mult.get(key, 0) + 1
        heavy = [key for key, c in mult.items() if c >= k]
        if not heavy:
            break
        for a, b in heavy:
            dsu.union(a, b)
    roots = sorted({dsu.find(v) for v in range(m.n)})
    group = {r: i for i, r in enumerate(roots)}
    members: list[list[int]] = [[] for _ in roots]
    for v in range(m.n):
        members[group[dsu.find(v)]].append(v)
    size = k + 1
    g = DynamicSimpleGraph(size * len(roots))
    for i in range(len(roots)):
        base = i * size
        for x in range(size):
            for y in range(x + 1, size):
                g.insert_edge(base + x, base + y)
    for (ra, rb), l in sorted(mult.items()):
        ga, gb = group[ra], group[rb]
        for j in range(l):
            g.insert_edge(ga * size + j, gb * size + j)
    back = [tuple(members[x // size]) for x in range(g.n)]
    return g, back


def maximal_k_edge_connected_multigraph(m: Multigraph, k: int,
                                        params: Optional[SparsifierParams] = None,
                                        identity: bool = False) -> KSubgraphPartition:
    """The classes of a multigraph, computed on its simple gadget and pulled back."""
    g, back = multigraph_to_simple_gadget(m, k)
    engine = DynamicNmc(g.n, g.edge_list())
    part = maximal_k_edge_connected(engine, k, params, identity, certify=False)
    classes = {tuple(sorted({v for x in c for v in back[x]})) for c in part.classes}
    return KSubgraphPartition(k, classes)
