"""Fully dynamic minimum spanning forest for edge weights in {0, 1}.

The forest is kept with the level scheme of Holm, de Lichtenberg and Thorup:
every edge has a level, ``F_i`` is the set of tree edges with level >= i and
each ``F_i`` lives in its own Euler-tour forest. A level-i tree never has
more than ``n >> i`` vertices, so levels stay below ``log2 n``. Deleting a
tree edge searches for a replacement level by level, first among weight-0
non-tree edges and then among weight-1 ones, so the cheapest reconnecting
edge wins. Path-maximum queries on insertion go to a link-cut mirror.

In ``canonical`` mode edges are keyed by ``(weight, id)`` and every
replacement search collects all candidates of the winning weight class,
so the forest is exactly the greedy forest under that order.
"""

from __future__ import annotations

from typing import Any, Iterable, Iterator, NamedTuple, Optional

from .counters import OpCounters
from .dsu import DSU
from .errors import DuplicateEdgeError, GraphError, SelfLoopError, UnknownEdgeError
from .eulertour import EulerTourForest
from .linkcut import LinkCutForest

TREE = "tree"
SWAP = "swap"
NONTREE = "nontree"


class MsfEdge(NamedTuple):
    id: int
    u: int
    v: int
    w: int


class MsfEvent(NamedTuple):
    kind: str
    evicted: Optional[MsfEdge] = None


class _Rec:
    __slots__ = ("id", "u", "v", "w", "key", "level", "tree", "lh", "eh")

    def __init__(self, eid: int, u: int, v: int, w: int, key: Any) -> None:
        self.id = eid
        self.u = u
        self.v = v
        self.w = w
        self.key = key
        self.level = 0
        self.tree = False
        self.lh: Any = None
        self.eh: list = []

    def edge(self) -> MsfEdge:
        return MsfEdge(self.id, self.u, self.v, self.w)


class DynMsf:
    def __init__(self, n: int, canonical: bool = False,
                 counters: Optional[OpCounters] = None) -> None:
        self.n = n
        self.canonical = canonical
        self.max_level = max(0, n.bit_length() - 1)
        self.lct = LinkCutForest(n)
        self.et = [EulerTourForest(n)]
        # level -> weight class -> vertex -> set of non-tree edge ids
        self._nt: list[tuple[dict, dict]] = [({}, {})]
        self._recs: dict[int, _Rec] = {}
        self._pairs: dict[tuple[int, int], int] = {}
        self._next_id = 0
        self._weight = 0
        self._light_nontree = 0
        self.counters = counters if counters is not None else OpCounters()

    # -- helpers ---------------------------------------------------------

    def _key(self, eid: int, w: int) -> Any:
        return (w, eid) if self.canonical else w

    def _ensure_level(self, i: int) -> None:
        if i > self.max_level:
            raise AssertionError(f"level {i} exceeds cap {self.max_level}")
        while len(self.et) <= i:
            self.et.append(EulerTourForest(self.n))
            self._nt.append(({}, {}))

    def _add_nontree(self, rec: _Rec, level: int) -> None:
        self._ensure_level(level)
        rec.tree = False
        rec.level = level
        buckets = self._nt[level][rec.w]
        et = self.et[level]
        for x in (rec.u, rec.v):
            s = buckets.get(x)
            if s is None:
                buckets[x] = {rec.id}
            else:
                s.add(rec.id)
            if rec.w == 0:
                et.add_counts(x, d0=1)
            else:
                et.add_counts(x, d1=1)
        if rec.w == 0:
            self._light_nontree += 1

    def _remove_nontree(self, rec: _Rec) -> None:
        buckets = self._nt[rec.level][rec.w]
        et = self.et[rec.level]
        for x in (rec.u, rec.v):
            s = buckets[x]
            s.discard(rec.id)
            if not s:
                del buckets[x]
            if rec.w == 0:
                et.add_counts(x, d0=-1)
            else:
                et.add_counts(x, d1=-1)
        if rec.w == 0:
            self._light_nontree -= 1

    def _add_tree(self, rec: _Rec, level: int) -> None:
        self._ensure_level(level)
        rec.tree = True
        rec.level = level
        rec.lh = self.lct.link(rec.u, rec.v, rec.key, rec, check=False)
        rec.eh = [self.et[0].link(rec.u, rec.v, rec.key, rec, flag=level == 0, check=False)]
        for i in range(1, level + 1):
            rec.eh.append(self.et[i].link(rec.u, rec.v, None, rec, flag=i == level, check=False))
        self._weight += rec.w

    def _cut_tree(self, rec: _Rec) -> None:
        self.lct.cut(rec.lh)
        for i, h in enumerate(rec.eh):
            self.et[i].cut(h)
        rec.lh = None
        rec.eh = []
        rec.tree = False
        self._weight -= rec.w

    def _promote_tree(self, rec: _Rec) -> None:
        i = rec.level
        self._ensure_level(i + 1)
        self.et[i].set_flag(rec.eh[i], False)
        rec.eh.append(self.et[i + 1].link(rec.u, rec.v, None, rec, flag=True, check=False))
        rec.level = i + 1
        self.counters.msf_promotions += 1

    def _promote_nontree(self, rec: _Rec) -> None:
        level = rec.level + 1
        self._remove_nontree(rec)
        self._add_nontree(rec, level)
        self.counters.msf_promotions += 1

    def _search_level(self, i: int, u: int, v: int, c: int,
                      first: bool) -> list[_Rec]:
        """Ordinary level-i step: promote the smaller side, return crossing edges."""
        et = self.et[i]
        x = u if et.tree_size(u) <= et.tree_size(v) else v
        for h in et.flagged_edges(x):
            self._promote_tree(h.data)
        buckets = self._nt[i][c]
        recs = self._recs
        found = []
        for y in et.vertices_with(x, c):
            s = buckets.get(y)
            if not s:
                continue
            for eid in list(s):
                rec = recs[eid]
                z = rec.v if rec.u == y else rec.u
                if et.same_tree(x, z):
                    self._promote_nontree(rec)
                else:
                    found.append(rec)
                    if first:
                        return found
        return found

    def _scan_level(self, i: int, u: int, v: int, c: int) -> Optional[_Rec]:
        """A class-c edge of level i across the split, without promotions.

        Returns the cheapest one in canonical mode and the first one seen
        otherwise.
        """
        et = self.et[i]
        x = u if et.tree_size(u) <= et.tree_size(v) else v
        buckets = self._nt[i][c]
        best = None
        for y in et.vertices_with(x, c):
            for eid in buckets.get(y, ()):
                rec = self._recs[eid]
                z = rec.v if rec.u == y else rec.u
                if not et.same_tree(x, z):
                    if not self.canonical:
                        return rec
                    if best is None or rec.key < best.key:
                        best = rec
        return best

    def _remove_tree_edge(self, rec: _Rec) -> Optional[_Rec]:
        top = rec.level
        self._cut_tree(rec)
        u, v = rec.u, rec.v
        for c in (0, 1):
            if c == 1 and not self.canonical:
                # plain search: no weight-0 edge crosses, so the first
                # crossing edge at the highest level is a best replacement
                for i in range(top, -1, -1):
                    found = self._search_level(i, u, v, 1, True)
                    if found:
                        return self._install(found[0])
                return None
            r = None
            for i in range(top, -1, -1):
                t = self._scan_level(i, u, v, c)
                if t is not None and (r is None or t.key < r.key):
                    r = t
                    if not self.canonical:
                        break
            if r is None:
                continue
            # promote as the plain search would down to r's level; crossing
            # edges met above that level would be left spanning two trees of
            # their own level, so they move down to it
            j = r.level
            strays = []
            for k in range(top, j - 1, -1):
                for c2 in (0, 1):
                    found = self._search_level(k, u, v, c2, False)
                    if k > j:
                        strays.extend(found)
            self._install(r)
            for f in strays:
                self._remove_nontree(f)
                self._add_nontree(f, j)
                self.counters.msf_demotions += 1
            return r
        return None

    def _install(self, r: _Rec) -> _Rec:
        level = r.level
        self._remove_nontree(r)
        self._add_tree(r, level)
        return r

    def _place(self, rec: _Rec, connected: bool = False) -> MsfEvent:
        u, v = rec.u, rec.v
        if not connected and not self.et[0].same_tree(u, v):
            self._add_tree(rec, 0)
            return MsfEvent(TREE)
        m, mkey = self.lct.path_max(u, v)  # type: ignore[misc]
        if mkey > rec.key:
            mrec = m.data
            if mrec.level == 0:
                self._cut_tree(mrec)
                self._add_tree(rec, 0)
            else:
                # the only cheaper edge across m's cut is rec itself
                self._add_nontree(rec, 0)
                r = self._remove_tree_edge(mrec)
                assert r is rec, "swap replacement mismatch"
            self._add_nontree(mrec, 0)
            return MsfEvent(SWAP, mrec.edge())
        self._add_nontree(rec, 0)
        return MsfEvent(NONTREE)

    # -- public API ------------------------------------------------------

    def __contains__(self, eid: int) -> bool:
        return eid in self._recs

    def __len__(self) -> int:
        return len(self._recs)

    def _new_rec(self, u: int, v: int, w: int, eid: Optional[int]) -> _Rec:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"vertex out of range in ({u}, {v})")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if w not in (0, 1):
            raise GraphError(f"weight must be 0 or 1, got {w!r}")
        pair = (u, v) if u < v else (v, u)
        if pair in self._pairs:
            raise DuplicateEdgeError(f"edge {{{u},{v}}} already present")
        if eid is None:
            eid = self._next_id
        elif eid in self._recs:
            raise DuplicateEdgeError(f"edge id {eid} already present")
        self._next_id = max(self._next_id, eid + 1)
        rec = _Rec(eid, u, v, w, self._key(eid, w))
        self._recs[eid] = rec
        self._pairs[pair] = eid
        return rec

    def insert(self, u: int, v: int, w: int, eid: Optional[int] = None) -> MsfEvent:
        rec = self._new_rec(u, v, w, eid)
        self.counters.msf_insert += 1
        return self._place(rec)

    def last_id(self) -> int:
        return self._next_id - 1

    def delete(self, eid: int) -> Optional[MsfEdge]:
        rec = self._recs.pop(eid, None)
        if rec is None:
            raise UnknownEdgeError(f"edge {eid} is not live")
        u, v = rec.u, rec.v
        del self._pairs[(u, v) if u < v else (v, u)]
        self.counters.msf_delete += 1
        if not rec.tree:
            self._remove_nontree(rec)
            return None
        r = self._remove_tree_edge(rec)
        return r.edge() if r is not None else None

    def set_weight(self, eid: int, w: int) -> None:
        """Equivalent to ``delete(eid)`` followed by re-inserting it with weight w.

        Cheap cases are handled in place; the forest stays minimum either way.
        """
        rec = self._recs.get(eid)
        if rec is None:
            raise UnknownEdgeError(f"edge {eid} is not live")
        if w not in (0, 1):
            raise GraphError(f"weight must be 0 or 1, got {w!r}")
        if w == rec.w:
            return
        c = self.counters
        if rec.tree and (w < rec.w or (not self.canonical and self._light_nontree == 0)):
            # a cheaper tree edge stays minimum; a dearer one too when no
            # weight-0 non-tree edge exists to undercut it
            c.msf_delete += 1
            c.msf_insert += 1
            self._weight += w - rec.w
            rec.w = w
            rec.key = self._key(eid, w)
            self.lct.set_weight(rec.lh, rec.key)
            self.et[0].set_weight(rec.eh[0], rec.key)
            return
        if not rec.tree:
            c.msf_delete += 1
            c.msf_insert += 1
            level = rec.level
            self._remove_nontree(rec)
            rec.w = w
            rec.key = self._key(eid, w)
            if w > 0:
                self._add_nontree(rec, level)
            else:
                self._place(rec, connected=True)
            return
        u, v = rec.u, rec.v
        self.delete(eid)
        self.insert(u, v, w, eid)

    def bulk_load(self, edges: Iterable[tuple[int, int, int, int]]) -> None:
        """Load ``(eid, u, v, w)`` edges into an empty structure at once."""
        if self._recs:
            raise GraphError("bulk_load requires an empty structure")
        recs = [self._new_rec(u, v, w, eid) for eid, u, v, w in edges]
        recs.sort(key=lambda r: (r.w, r.id))
        dsu = DSU(self.n)
        d0: dict[int, int] = {}
        d1: dict[int, int] = {}
        buckets0, buckets1 = self._nt[0]
        for rec in recs:
            if dsu.union(rec.u, rec.v):
                self._add_tree(rec, 0)
                continue
            if rec.w == 0:
                buckets, counts = buckets0, d0
                self._light_nontree += 1
            else:
                buckets, counts = buckets1, d1
            for x in (rec.u, rec.v):
                s = buckets.get(x)
                if s is None:
                    buckets[x] = {rec.id}
                else:
                    s.add(rec.id)
                counts[x] = counts.get(x, 0) + 1
        et = self.et[0]
        for x, k in d0.items():
            et.add_counts(x, d0=k)
        for x, k in d1.items():
            et.add_counts(x, d1=k)

    def connected(self, u: int, v: int) -> bool:
        self.counters.msf_connected += 1
        return self.et[0].same_tree(u, v)

    def forest_weight(self) -> int:
        return self._weight

    def forest_edges(self) -> Iterator[MsfEdge]:
        for eid in sorted(self._recs):
            rec = self._recs[eid]
            if rec.tree:
                yield rec.edge()

    def edges(self) -> Iterator[MsfEdge]:
        for eid in sorted(self._recs):
            yield self._recs[eid].edge()

    def edge(self, eid: int) -> MsfEdge:
        try:
            return self._recs[eid].edge()
        except KeyError:
            raise UnknownEdgeError(f"edge {eid} is not live") from None

    def find_edge(self, u: int, v: int) -> Optional[int]:
        return self._pairs.get((u, v) if u < v else (v, u))

    def is_tree(self, eid: int) -> bool:
        return self._recs[eid].tree

    def weight(self, eid: int) -> int:
        return self._recs[eid].w

    def level(self, eid: int) -> int:
        return self._recs[eid].level

    def tree_size(self, v: int) -> int:
        return self.et[0].tree_size(v)

    def max_tree_edge(self, v: int) -> Optional[MsfEdge]:
        """A maximum-weight forest edge anywhere in v's tree."""
        t = self.et[0].tree_max_edge(v)
        return None if t is None else t[0].data.edge()

    def evert(self, v: int) -> None:
        self.lct.evert(v)

    def parent_side(self, eid: int) -> tuple[int, int]:
        """Endpoints of forest edge ``eid`` as (closer, farther) to the current root."""
        return self.lct.parent_side(self._recs[eid].lh)

    def root_path_max(self, x: int) -> Optional[MsfEdge]:
        """Maximum edge on the path from the current root to x, closest to the root."""
        t = self.lct.max_edge(x)
        return None if t is None else t[0].data.edge()

    def tree_vertices(self, v: int) -> list[int]:
        return self.et[0].tree_vertices(v)

    @property
    def steps(self) -> int:
        return self.lct.steps + sum(et.steps for et in self.et)

    def audit(self) -> None:
        """Check the level invariants and minimality of the forest."""
        n = self.n
        weight = 0
        per_level: list[tuple[dict, dict]] = [({}, {}) for _ in self.et]
        for rec in self._recs.values():
            assert rec.key == self._key(rec.id, rec.w)
            if rec.tree:
                weight += rec.w
                assert rec.lh is not None and rec.lh.alive
                assert len(rec.eh) == rec.level + 1
                for i, h in enumerate(rec.eh):
                    assert h.alive
                    assert (h.a1.tf == 1) == (i == rec.level)
            else:
                assert self.et[rec.level].same_tree(rec.u, rec.v), "non-tree edge spans levels"
                m = self.lct.path_max(rec.u, rec.v)
                assert m is not None and not m[1] > rec.key, "cycle property"
                for x in (rec.u, rec.v):
                    d = per_level[rec.level][rec.w]
                    d[x] = d.get(x, 0) + 1
        assert weight == self._weight
        assert self._light_nontree == sum(
            1 for r in self._recs.values() if not r.tree and r.w == 0)
        for i, et in enumerate(self.et):
            cap = n >> i
            for x in range(n):
                if et.has_node(x):
                    assert et.tree_size(x) <= cap, f"level {i} tree too large"
                    c0, c1 = et.counts(x)
                    assert c0 == per_level[i][0].get(x, 0)
                    assert c1 == per_level[i][1].get(x, 0)
                for c in (0, 1):
                    got = len(self._nt[i][c].get(x, ()))
                    assert got == per_level[i][c].get(x, 0)
