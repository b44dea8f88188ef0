"""Mutable simple graph with stable edge identifiers and sampled adjacency."""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, TextIO

from .errors import (DuplicateEdgeError, EmptyAdjacencyError, GraphError,
                     SelfLoopError, UnknownEdgeError)
from .sampler import Handle, SampledList


class Edge(NamedTuple):
    id: int
    u: int
    v: int

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class DynamicSimpleGraph:
    """A simple undirected graph on a fixed vertex set ``0..n-1``.

    Edge identifiers are handed out in increasing order and never re-issued.
    Every vertex keeps its incident edges in a :class:`SampledList`, so an
    incident edge can be drawn uniformly at random in O(log n) time.
    """

    def __init__(self, n: int) -> None:
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        self.n = n
        self.edges: dict[int, Edge] = {}
        self._pairs: dict[tuple[int, int], int] = {}
        self.adjacency = [SampledList() for _ in range(n)]
        self._handles: dict[int, tuple[Handle, Handle]] = {}
        self._next_id = 0

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "DynamicSimpleGraph":
        g = cls(n)
        for u, v in edges:
            g.insert_edge(u, v)
        return g

    def __contains__(self, eid: int) -> bool:
        return eid in self.edges

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def next_id(self) -> int:
        return self._next_id

    def _check_vertex(self, x: int) -> None:
        if not 0 <= x < self.n:
            raise GraphError(f"vertex {x} out of range 0..{self.n - 1}")

    def _add(self, eid: int, u: int, v: int) -> None:
        e = Edge(eid, u, v)
        self.edges[eid] = e
        self._pairs[_pair(u, v)] = eid
        self._handles[eid] = (self.adjacency[u].append(eid),
                              self.adjacency[v].append(eid))

    def _check_new(self, u: int, v: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if _pair(u, v) in self._pairs:
            raise DuplicateEdgeError(f"edge {{{u},{v}}} already present")

    def insert_edge(self, u: int, v: int) -> int:
        self._check_new(u, v)
        eid = self._next_id
        self._next_id += 1
        self._add(eid, u, v)
        return eid

    def restore_edge(self, eid: int, u: int, v: int) -> None:
        """Re-insert a previously deleted edge under its original identifier.

        Used to roll back deletions made while answering a query.
        """
        self._check_new(u, v)
        if eid in self.edges or not 0 <= eid < self._next_id:
            raise GraphError(f"edge id {eid} cannot be restored")
        self._add(eid, u, v)

    def delete_edge(self, eid: int) -> Edge:
        try:
            e = self.edges.pop(eid)
        except KeyError:
            raise UnknownEdgeError(f"edge {eid} is not live") from None
        del self._pairs[_pair(e.u, e.v)]
        hu, hv = self._handles.pop(eid)
        self.adjacency[e.u].remove(hu)
        self.adjacency[e.v].remove(hv)
        return e

    def find_edge(self, u: int, v: int) -> int | None:
        return self._pairs.get(_pair(u, v))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def min_degree(self, vertices: Iterable[int] | None = None) -> int:
        """Minimum degree by a linear scan; 0 for an edgeless graph."""
        adj = self.adjacency
        it = range(self.n) if vertices is None else vertices
        best = None
        for v in it:
            d = len(adj[v])
            if best is None or d < best:
                best = d
        return 0 if best is None else best

    def incident(self, v: int) -> Iterator[int]:
        return iter(self.adjacency[v])

    def neighbors(self, v: int) -> Iterator[int]:
        edges = self.edges
        for eid in self.adjacency[v]:
            yield edges[eid].other(v)

    def sample_incident_edge(self, v: int, rng) -> int:
        adj = self.adjacency[v]
        if len(adj) == 0:
            raise EmptyAdjacencyError(f"vertex {v} has no incident edges")
        return adj.sample(rng)

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by minimum vertex."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.neighbors(x):
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            comp.sort()
            out.append(comp)
        return out

    def edge_list(self) -> list[tuple[int, int]]:
        """Canonical sorted ``(u, v)`` pairs with ``u < v``."""
        return sorted(_pair(e.u, e.v) for e in self.edges.values())

    def write_edge_list(self, fh: TextIO) -> None:
        for u, v in self.edge_list():
            fh.write(f"{u} {v}\n")

    def audit(self) -> None:
        """Check adjacency, edge map, pair index and degrees agree exactly."""
        total = 0
        for v in range(self.n):
            adj = self.adjacency[v]
            adj.check_invariants()
            for eid in adj:
                e = self.edges[eid]
                assert v in (e.u, e.v), f"edge {eid} listed at non-endpoint {v}"
            total += len(adj)
        assert total == 2 * len(self.edges), "degree sum"
        assert len(self._pairs) == len(self.edges)
        for eid, e in self.edges.items():
            assert e.u != e.v
            assert self._pairs[_pair(e.u, e.v)] == eid
            hu, hv = self._handles[eid]
            assert hu.live and hv.live and hu.item == eid == hv.item


def read_edge_list(fh: TextIO) -> list[tuple[int, int]]:
    out = []
    for line in fh:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        a, b = line.split()
        out.append((int(a), int(b)))
    return out
