"""Minimum cuts of small multigraphs and of the dynamic graph via its sparsifier."""

from __future__ import annotations

import heapq
from typing import Iterable, NamedTuple, Optional, TextIO

import numpy as np

from .errors import DegenerateInputError, DisconnectedError, SizeLimitError
from .multigraph import Multigraph
from .sparsifier import build_nmc_sparsifier


class Cut(NamedTuple):
    side: tuple[int, ...]
    crossing: tuple
    trivial: bool


class CutFamily:
    """All minimum cuts found, each with its side-set and crossing edges.

    Sides are stored normalised: the smaller side, or on a tie the one that
    avoids the smallest vertex.
    """

    def __init__(self, value: int, cuts: list[Cut]) -> None:
        self.value = value
        self.cuts = sorted(cuts, key=lambda c: (len(c.side), c.side))

    def __len__(self) -> int:
        return len(self.cuts)

    def sides(self) -> set[tuple[int, ...]]:
        return {c.side for c in self.cuts}

    def nontrivial(self) -> list[Cut]:
        return [c for c in self.cuts if not c.trivial]

    def write(self, fh: TextIO, endpoints=None) -> None:
        """Text form; ``endpoints`` maps a crossing label to its ``(u, v)`` pair."""
        fh.write(f"mincuts value {self.value} count {len(self.cuts)}\n")
        for c in self.cuts:
            tag = "trivial" if c.trivial else "nontrivial"
            fh.write(f"cut {tag} side " + " ".join(map(str, c.side)) + "\n")
            if endpoints is None:
                fh.write("crossing " + " ".join(map(str, c.crossing)) + "\n")
            else:
                pairs = sorted(endpoints(x) for x in c.crossing)
                fh.write("crossing " + " ".join(f"{u}-{v}" for u, v in pairs) + "\n")


def _normalise(side: Iterable[int], universe: list[int]) -> tuple[int, ...]:
    s = set(side)
    rest = len(universe) - len(s)
    if len(s) > rest or (len(s) == rest and universe[0] in s):
        s = set(universe) - s
    return tuple(sorted(s))


def min_cut_exact(h: Multigraph) -> tuple[int, list[int]]:
    """Global minimum cut by maximum-adjacency orderings; returns (value, one side)."""
    if h.n < 2:
        raise DegenerateInputError("minimum cut needs at least two vertices")
    if not h.is_connected():
        raise DisconnectedError("multigraph is disconnected")
    adj: dict[int, dict[int, int]] = {v: {} for v in range(h.n)}
    for (a, b), w in h.weights().items():
        adj[a][b] = w
        adj[b][a] = w
    groups = {v: [v] for v in range(h.n)}
    best, best_side = None, None
    while len(adj) > 1:
        start = min(adj)
        seen = {start}
        conn = dict(adj[start])
        heap = [(-w, y) for y, w in conn.items()]
        heapq.heapify(heap)
        prev, last = start, start
        while len(seen) < len(adj):
            while True:
                negw, y = heapq.heappop(heap)
                if y not in seen and conn[y] == -negw:
                    break
            seen.add(y)
            prev, last = last, y
            for z, w in adj[y].items():
                if z not in seen:
                    conn[z] = conn.get(z, 0) + w
                    heapq.heappush(heap, (-conn[z], z))
        phase = conn[last]
        if best is None or phase < best:
            best, best_side = phase, list(groups[last])
        # merge last into prev
        for z, w in adj.pop(last).items():
            del adj[z][last]
            if z != prev:
                adj[prev][z] = adj[prev].get(z, 0) + w
                adj[z][prev] = adj[prev][z]
        groups[prev].extend(groups.pop(last))
    return best, sorted(best_side)  # type: ignore[return-value]


def cut_values(h: Multigraph) -> np.ndarray:
    """Cut value of every side T of ``V - {0}``, indexed by bitmask over vertices 1..n-1."""
    n = h.n
    w = np.zeros((n, n), dtype=np.int64)
    for (a, b), c in h.weights().items():
        w[a, b] = w[b, a] = c
    deg = w.sum(axis=1)
    vals = np.zeros(1, dtype=np.int64)
    for i in range(1, n):
        # weight from vertex i into each subset of the vertices 1..i-1
        into = np.zeros(1, dtype=np.int64)
        for j in range(1, i):
            into = np.concatenate((into, into + w[i, j]))
        vals = np.concatenate((vals, vals + deg[i] - 2 * into))
    return vals


def enumerate_min_cuts(h: Multigraph, limit_n: int = 20) -> CutFamily:
    """Every minimum cut of a connected multigraph by exhaustive enumeration."""
    if h.n > limit_n:
        raise SizeLimitError(f"{h.n} vertices exceeds enumeration limit {limit_n}")
    if h.n < 2:
        raise DegenerateInputError("minimum cut needs at least two vertices")
    if not h.is_connected():
        raise DisconnectedError("multigraph is disconnected")
    vals = cut_values(h)
    vals[0] = np.iinfo(np.int64).max
    lam = int(vals.min())
    universe = list(range(h.n))
    cuts = []
    for mask in np.flatnonzero(vals == lam):
        side = [v for v in range(1, h.n) if (int(mask) >> (v - 1)) & 1]
        crossing = tuple(sorted(h.labels[i] for i in h.crossing(side)))
        side_t = _normalise(side, universe)
        cuts.append(Cut(side_t, crossing, len(side_t) == 1 or len(side_t) == h.n - 1))
    return CutFamily(lam, cuts)


# -- queries on the dynamic graph ------------------------------------------

def _require_connected(engine) -> None:
    if engine.n < 2:
        raise DegenerateInputError("graph needs at least two vertices")
    if len(engine.graph.components()) != 1:
        raise DisconnectedError("graph is disconnected")


def _graph_cut(engine, side: Iterable[int]) -> Cut:
    """Recount the crossing edges of ``side`` in the live graph."""
    universe = list(range(engine.n))
    side_t = _normalise(side, universe)
    s = set(side_t)
    crossing = tuple(sorted(e.id for e in engine.graph.edges.values() if (e.u in s) != (e.v in s)))
    return Cut(side_t, crossing, len(side_t) == 1 or len(side_t) == engine.n - 1)


def min_cuts_of_graph(engine, params=None, limit_n: int = 20) -> CutFamily:
    """The minimum-cut family of the graph held by ``engine``, read off its sparsifier."""
    _require_connected(engine)
    delta = engine.graph.min_degree()
    out = build_nmc_sparsifier(engine, params)
    lam_hat: Optional[int] = None
    fam_hat = None
    if out.n_super >= 2:
        fam_hat = enumerate_min_cuts(out.multigraph(), limit_n)
        lam_hat = fam_hat.value
    cuts: dict[tuple[int, ...], Cut] = {}
    if lam_hat is not None and lam_hat <= delta:
        for c in fam_hat.cuts:  # type: ignore[union-attr]
            g = _graph_cut(engine, out.expand(c.side))
            assert len(g.crossing) == lam_hat, "mapped cut changed value"
            assert set(g.crossing) == set(c.crossing)
            cuts[g.side] = g
    if lam_hat is None or lam_hat >= delta:
        for v in range(engine.n):
            if engine.graph.degree(v) == delta:
                g = _graph_cut(engine, [v])
                cuts.setdefault(g.side, g)
    value = delta if lam_hat is None else min(lam_hat, delta)
    return CutFamily(value, list(cuts.values()))


def min_cut_report(engine, params=None) -> tuple[int, Cut]:
    """The minimum-cut value and one explicit cut of the graph."""
    _require_connected(engine)
    delta = engine.graph.min_degree()
    out = build_nmc_sparsifier(engine, params)
    if out.n_super >= 2:
        value, side = min_cut_exact(out.multigraph())
        if value <= delta:
            g = _graph_cut(engine, out.expand(side))
            assert len(g.crossing) == value
            return value, g
    v = min(range(engine.n), key=engine.graph.degree)
    g = _graph_cut(engine, [v])
    assert len(g.crossing) == delta
    return delta, g
