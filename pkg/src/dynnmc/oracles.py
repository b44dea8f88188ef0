"""Brute-force reference answers computed from plain edge lists.

Nothing here touches the dynamic structures; every function takes a vertex
count and a list of edges and recomputes its answer from scratch.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import BudgetError
from .kedge import KSubgraphPartition
from .mincut import Cut, CutFamily


@dataclass
class OracleBudget:
    max_vertices: int = 20
    max_flow_edges: int = 20000

    def check_vertices(self, n: int) -> None:
        if n > self.max_vertices:
            raise BudgetError(f"{n} vertices exceeds oracle budget {self.max_vertices}")

    def check_edges(self, m: int) -> None:
        if m > self.max_flow_edges:
            raise BudgetError(f"{m} edges exceeds oracle budget {self.max_flow_edges}")


DEFAULT_BUDGET = OracleBudget()


def _adjacency(n: int, edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    return adj


def _connected(adj: list[list[int]], verts: Sequence[int]) -> bool:
    if not verts:
        return False
    inside = set(verts)
    seen = {verts[0]}
    todo = [verts[0]]
    while todo:
        x = todo.pop()
        for y in adj[x]:
            if y in inside and y not in seen:
                seen.add(y)
                todo.append(y)
    return len(seen) == len(inside)


def oracle_components(n: int, edges: Iterable[tuple[int, int]]) -> list[tuple[int, ...]]:
    adj = _adjacency(n, edges)
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        todo = deque([s])
        while todo:
            x = todo.popleft()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    todo.append(y)
        out.append(tuple(sorted(comp)))
    return out


def oracle_min_cut_family(n: int, edges: Sequence[tuple[int, int]],
                          labels: Optional[Sequence] = None,
                          budget: OracleBudget = DEFAULT_BUDGET) -> CutFamily:
    """All minimum bipartitions with two connected sides, by full enumeration.

    Edges may repeat (multigraph). ``labels`` name the edges in crossing
    sets (default: their positions).
    """
    budget.check_vertices(n)
    if n < 2:
        raise BudgetError("need at least two vertices")
    labels = list(labels) if labels is not None else list(range(len(edges)))
    count = 1 << (n - 1)
    masks = np.arange(count, dtype=np.int64)
    # membership of vertex v (v >= 1) in side T, indexed by mask
    side = [np.zeros(count, dtype=bool)] + [((masks >> (v - 1)) & 1).astype(bool) for v in range(1, n)]
    values = np.zeros(count, dtype=np.int64)
    for a, b in edges:
        values += side[a] ^ side[b]
    values[0] = np.iinfo(np.int64).max
    adj = _adjacency(n, edges)
    verts = list(range(n))
    for lam in np.unique(values):
        if lam == np.iinfo(np.int64).max:
            break
        cuts = []
        for mask in np.flatnonzero(values == lam):
            t = [v for v in range(1, n) if side[v][mask]]
            rest = [v for v in verts if not side[v][mask]]
            if not (_connected(adj, t) and _connected(adj, rest)):
                continue
            small = t if (len(t) < len(rest) or (len(t) == len(rest) and 0 in rest)) else rest
            inside = set(small)
            crossing = tuple(sorted(labels[i] for i, (a, b) in enumerate(edges)
                                    if (a in inside) != (b in inside)))
            cuts.append(Cut(tuple(small), crossing, len(small) == 1))
        if cuts:
            return CutFamily(int(lam), cuts)
    return CutFamily(0, [])


def oracle_edge_connectivity(n: int, edges: Sequence[tuple[int, int]], u: int, v: int,
                             budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Maximum number of edge-disjoint u-v paths (unit capacities, BFS augmentation)."""
    budget.check_edges(len(edges))
    if u == v:
        raise ValueError("endpoints must differ")
    # residual capacities: each undirected edge gives one unit in both directions
    cap: list[dict[int, int]] = [dict() for _ in range(n)]
    for a, b in edges:
        cap[a][b] = cap[a].get(b, 0) + 1
        cap[b][a] = cap[b].get(a, 0) + 1
    flow = 0
    while True:
        parent = {u: u}
        todo = deque([u])
        while todo and v not in parent:
            x = todo.popleft()
            for y, c in cap[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    todo.append(y)
        if v not in parent:
            return flow
        y = v
        while y != u:
            x = parent[y]
            cap[x][y] -= 1
            cap[y][x] = cap[y].get(x, 0) + 1
            y = x
        flow += 1


def oracle_msf(edges: Iterable[tuple[int, int, int, int]]) -> tuple[int, frozenset]:
    """Greedy minimum spanning forest of ``(eid, u, v, w)`` rows under (w, eid) order."""
    rows = sorted(edges, key=lambda r: (r[3], r[0]))
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    total = 0
    chosen = []
    for eid, u, v, w in rows:
        a, b = find(u), find(v)
        if a != b:
            parent[a] = b
            total += w
            chosen.append(eid)
    return total, frozenset(chosen)


def oracle_k_subgraphs(n: int, edges: Sequence[tuple[int, int]], k: int,
                       budget: OracleBudget = DEFAULT_BUDGET) -> KSubgraphPartition:
    """Maximal k-edge-connected classes by peeling and splitting at minimum cuts."""
    classes = []
    work = [list(range(n))]
    while work:
        verts = work.pop()
        inside = set(verts)
        sub = [(a, b) for a, b in edges if a in inside and b in inside]
        deg = {v: 0 for v in verts}
        for a, b in sub:
            deg[a] += 1
            deg[b] += 1
        low = [v for v in verts if deg[v] < k]
        if low:
            classes.extend([v] for v in low)
            rest = [v for v in verts if deg[v] >= k]
            if rest:
                work.append(rest)
            continue
        index = {v: i for i, v in enumerate(verts)}
        local = [(index[a], index[b]) for a, b in sub]
        comps = oracle_components(len(verts), local)
        if len(comps) > 1:
            work.extend([verts[i] for i in c] for c in comps)
            continue
        if len(verts) == 1:
            classes.append(verts)
            continue
        fam = oracle_min_cut_family(len(verts), local, budget=budget)
        if fam.value >= k:
            classes.append(verts)
            continue
        s = set(fam.cuts[0].side)
        work.append([verts[i] for i in range(len(verts)) if i in s])
        work.append([verts[i] for i in range(len(verts)) if i not in s])
    return KSubgraphPartition(k, classes, [True] * len(classes))


def oracle_contraction(n: int, edges: Sequence[tuple[int, int, int]],
                       contracted: Iterable[int]) -> tuple[frozenset, dict[int, tuple]]:
    """Contract the edges with ids in ``contracted`` among ``(eid, u, v)`` rows.

    Returns the supernode partition (as a set of vertex tuples) and, for
    every surviving edge id, the pair of supernodes (as vertex tuples) it joins.
    """
    con = set(contracted)
    adj = _adjacency(n, [(u, v) for eid, u, v in edges if eid in con])
    label = [-1] * n
    groups: list[tuple[int, ...]] = []
    for s in range(n):
        if label[s] >= 0:
            continue
        label[s] = len(groups)
        comp = [s]
        todo = [s]
        while todo:
            x = todo.pop()
            for y in adj[x]:
                if label[y] < 0:
                    label[y] = label[s]
                    comp.append(y)
                    todo.append(y)
        groups.append(tuple(sorted(comp)))
    kept = {}
    for eid, u, v in edges:
        if label[u] != label[v]:
            kept[eid] = tuple(sorted((groups[label[u]], groups[label[v]])))
    return frozenset(groups), kept
