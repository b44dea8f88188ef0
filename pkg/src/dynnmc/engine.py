"""The dynamic graph together with the two forest structures queries need."""

from __future__ import annotations

from typing import Iterable

from .forests import DcsStructure, DsfStructure
from .graph import DynamicSimpleGraph, Edge
from .errors import UnknownEdgeError


class DynamicNmc:
    """A fully dynamic simple graph mirrored into a DCS and a DSF.

    Every update is applied to all three. The DCS keeps an empty forest
    between queries; the DSF keeps a spanning forest of the graph.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        self.n = n
        self.graph = DynamicSimpleGraph.from_edges(n, edges)
        self.dcs = DcsStructure(n)
        self.dsf = DsfStructure(n)
        rows = [(e.id, e.u, e.v) for e in self.graph.edges.values()]
        if rows:
            self.dcs.bulk_load(rows)
            self.dsf.bulk_load(rows)

    @property
    def m(self) -> int:
        return self.graph.m

    def insert(self, u: int, v: int) -> int:
        eid = self.graph.insert_edge(u, v)
        self.dcs.insert_G(u, v, eid)
        self.dsf.insert(u, v, eid)
        return eid

    def delete(self, eid: int) -> Edge:
        e = self.graph.delete_edge(eid)
        self.dcs.delete_G(eid)
        self.dsf.delete(eid)
        return e

    def delete_pair(self, u: int, v: int) -> Edge:
        eid = self.graph.find_edge(u, v)
        if eid is None:
            raise UnknownEdgeError(f"no live edge {{{u},{v}}}")
        return self.delete(eid)

    def restore_edge(self, eid: int, u: int, v: int) -> None:
        """Undo the deletion of edge ``eid``, keeping its identifier."""
        self.graph.restore_edge(eid, u, v)
        self.dcs.insert_G(u, v, eid)
        self.dsf.insert(u, v, eid)

    def snapshot(self) -> tuple:
        edges = tuple(sorted(self.graph.edges.values()))
        return edges, self.dcs.snapshot(), self.dsf.snapshot()

    def audit(self) -> None:
        self.graph.audit()
        self.dcs.audit()
        self.dsf.audit()
        ids = sorted(self.graph.edges)
        assert ids == [e.id for e in self.dcs.msf.edges()]
        assert ids == [e.id for e in self.dsf.dcs.msf.edges()]
        assert self.dcs.F_size() == 0, "query DCS forest not empty"
