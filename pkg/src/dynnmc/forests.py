"""Dynamic cut-set (DCS) and dynamic spanning forest (DSF) structures.

Both reduce to :class:`~dynnmc.msf.DynMsf` with weights in {0, 1}: the
user-controlled forest F of a DCS is exactly its set of weight-0 ("light")
edges, every other edge is heavy. Because F is a forest of light edges, the
minimum spanning forest F' always contains it, so each tree of F sits inside
a tree of F'. A separate Euler-tour forest holds F itself for tree sizes and
same-tree tests.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .counters import OpCounters
from .dsu import DSU
from .errors import UnknownEdgeError
from .eulertour import EtEdge, EulerTourForest
from .msf import DynMsf, MsfEdge


def _partition(n: int, tree_vertices) -> tuple[tuple[int, ...], ...]:
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        comp = sorted(tree_vertices(s))
        for x in comp:
            seen[x] = True
        out.append(tuple(comp))
    return tuple(out)


class DcsStructure:
    def __init__(self, n: int, counters: Optional[OpCounters] = None) -> None:
        self.n = n
        self.counters = counters if counters is not None else OpCounters()
        self.msf = DynMsf(n, counters=self.counters)
        self.fet = EulerTourForest(n)
        self._f: dict[int, EtEdge] = {}

    def __contains__(self, eid: int) -> bool:
        return eid in self.msf

    def edge(self, eid: int) -> MsfEdge:
        return self.msf.edge(eid)

    def in_F(self, eid: int) -> bool:
        return eid in self._f

    def F_size(self) -> int:
        return len(self._f)

    def F_edges(self) -> list[int]:
        return sorted(self._f)

    def bulk_load(self, edges: Iterable[tuple[int, int, int]],
                  light: Iterable[int] = ()) -> None:
        """Load ``(eid, u, v)`` edges into an empty structure; ``light`` must be a forest."""
        light = set(light)
        rows = [(eid, u, v, 0 if eid in light else 1) for eid, u, v in edges]
        self.msf.bulk_load(rows)
        for eid, u, v, w in rows:
            if w == 0:
                self._f[eid] = self.fet.link(u, v, 0, eid, check=False)

    def insert_G(self, u: int, v: int, eid: Optional[int] = None) -> int:
        self.counters.dcs_insert_G += 1
        self.msf.insert(u, v, 1, eid)
        return self.msf.last_id() if eid is None else eid

    def insert_F(self, eid: int, apart: bool = False) -> bool:
        """Add edge ``eid`` to F unless that closes a cycle.

        ``apart=True`` is a promise that its endpoints are in different F-trees.
        """
        self.counters.dcs_insert_F += 1
        e = self.msf.edge(eid)
        if eid in self._f or (not apart and self.fet.same_tree(e.u, e.v)):
            return False
        self.msf.set_weight(eid, 0)
        self._f[eid] = self.fet.link(e.u, e.v, 0, eid, check=False)
        return True

    def delete_G(self, eid: int) -> MsfEdge:
        self.counters.dcs_delete_G += 1
        e = self.msf.edge(eid)
        h = self._f.pop(eid, None)
        if h is not None:
            self.fet.cut(h)
        self.msf.delete(eid)
        return e

    def delete_F(self, eid: int) -> bool:
        self.counters.dcs_delete_F += 1
        if eid not in self.msf:
            raise UnknownEdgeError(f"edge {eid} is not live")
        h = self._f.pop(eid, None)
        if h is None:
            return False
        self.fet.cut(h)
        self.msf.set_weight(eid, 1)
        return True

    def find_cutedge(self, v: int) -> Optional[MsfEdge]:
        """An edge with exactly one endpoint in the F-tree of v, or None."""
        self.counters.dcs_find_cutedge += 1
        msf, fet = self.msf, self.fet
        if fet.tree_size(v) == msf.tree_size(v):
            return None
        top = msf.max_tree_edge(v)
        assert top is not None and top.w == 1, "F'-tree larger than F-tree has a heavy edge"
        if fet.same_tree(v, top.u) or fet.same_tree(v, top.v):
            return top
        msf.evert(v)
        closer, _ = msf.parent_side(top.id)
        e = msf.root_path_max(closer)
        assert e is not None
        return e

    def f_tree_size(self, v: int) -> int:
        return self.fet.tree_size(v)

    def f_connected(self, u: int, v: int) -> bool:
        return self.fet.same_tree(u, v)

    def snapshot(self) -> tuple:
        """Graph edges with weights, F, and the weight and components of F'."""
        return (
            tuple(self.msf.edges()),
            tuple(sorted(self._f)),
            self.msf.forest_weight(),
            _partition(self.n, self.msf.tree_vertices),
        )

    def audit(self) -> None:
        light = [e.id for e in self.msf.edges() if e.w == 0]
        assert light == sorted(self._f), "light edges differ from F"
        for eid, h in self._f.items():
            assert h.alive and h.data == eid
            assert self.msf.is_tree(eid), "F edge outside F'"
        for s in range(self.n):
            for x in self.fet.tree_vertices(s):
                assert self.msf.et[0].same_tree(s, x), "F-tree split across F'"
        self.msf.audit()


class DsfStructure:
    """Spanning forest of the graph kept through a DCS."""

    def __init__(self, n: int, counters: Optional[OpCounters] = None) -> None:
        self.n = n
        self.counters = counters if counters is not None else OpCounters()
        self.dcs = DcsStructure(n, OpCounters())

    def bulk_load(self, edges: Iterable[tuple[int, int, int]]) -> None:
        edges = list(edges)
        dsu = DSU(self.n)
        light = [eid for eid, u, v in edges if dsu.union(u, v)]
        self.dcs.bulk_load(edges, light)

    def __contains__(self, eid: int) -> bool:
        return eid in self.dcs

    def insert(self, u: int, v: int, eid: Optional[int] = None) -> tuple[int, bool]:
        self.counters.dsf_insert += 1
        eid = self.dcs.insert_G(u, v, eid)
        return eid, self.dcs.insert_F(eid)

    def delete(self, eid: int) -> Optional[MsfEdge]:
        """Delete an edge; if it was a forest edge, return the replacement (if any)."""
        self.counters.dsf_delete += 1
        dcs = self.dcs
        e = dcs.edge(eid)
        was_tree = dcs.delete_F(eid)
        dcs.delete_G(eid)
        if not was_tree:
            return None
        r = dcs.find_cutedge(e.u)
        if r is not None:
            dcs.insert_F(r.id)
        return r

    def edge(self, eid: int) -> MsfEdge:
        return self.dcs.edge(eid)

    def is_forest_edge(self, eid: int) -> bool:
        return self.dcs.in_F(eid)

    def forest_edges(self) -> list[int]:
        return self.dcs.F_edges()

    def connected(self, u: int, v: int) -> bool:
        return self.dcs.f_connected(u, v)

    def components(self) -> tuple[tuple[int, ...], ...]:
        return _partition(self.n, self.dcs.fet.tree_vertices)

    def snapshot(self) -> tuple:
        """Graph edges and component partition; the forest itself may differ."""
        return (
            tuple((e.id, e.u, e.v) for e in self.dcs.msf.edges()),
            self.components(),
        )

    def audit(self) -> None:
        self.dcs.audit()
        assert self.dcs.F_size() == self.n - len(self.components())
