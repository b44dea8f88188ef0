"""Euler-tour trees over splay-balanced sequences.

A tree's tour is stored as a sequence holding one node per vertex and two
arc nodes per tree edge. Every splay node aggregates, over its subtree:

* ``sc``  -- number of vertex nodes (tree size),
* ``smw``/``wit`` -- maximum arc weight and an arc achieving it,
* ``sf``  -- number of flagged arcs (tree edges owned by this forest level),
* ``s0``/``s1`` -- per-vertex counters (non-tree incidences by weight class).

The counters are opaque to this module; the dynamic MSF uses them to find
promotable tree edges and candidate replacement edges by descending only
into subtrees with non-zero totals.
"""

from __future__ import annotations

from typing import Any, Optional

from .errors import CycleError, StaleHandleError


class _ENode:
    __slots__ = ("l", "r", "p", "vid", "edge", "cnt", "w", "tf", "n0", "n1",
                 "sc", "smw", "wit", "sf", "s0", "s1")

    def __init__(self, vid: int = -1, edge: Any = None, w: Any = None) -> None:
        self.l: Optional[_ENode] = None
        self.r: Optional[_ENode] = None
        self.p: Optional[_ENode] = None
        self.vid = vid
        self.edge = edge
        self.cnt = 1 if vid >= 0 else 0
        self.w = w
        self.tf = 0
        self.n0 = self.n1 = 0
        self.sc = self.cnt
        self.smw = w
        self.wit = self if w is not None else None
        self.sf = 0
        self.s0 = self.s1 = 0


def _upd(x: _ENode) -> None:
    sc = x.cnt
    sf = x.tf
    s0 = x.n0
    s1 = x.n1
    mw = x.w
    wit = x if mw is not None else None
    a = x.l
    if a is not None:
        sc += a.sc
        sf += a.sf
        s0 += a.s0
        s1 += a.s1
        am = a.smw
        if am is not None and (mw is None or am > mw):
            mw = am
            wit = a.wit
    b = x.r
    if b is not None:
        sc += b.sc
        sf += b.sf
        s0 += b.s0
        s1 += b.s1
        bm = b.smw
        if bm is not None and (mw is None or bm > mw):
            mw = bm
            wit = b.wit
    x.sc = sc
    x.sf = sf
    x.s0 = s0
    x.s1 = s1
    x.smw = mw
    x.wit = wit


def _rot(x: _ENode) -> None:
    """Rotate x above its parent and refresh the parent's aggregates."""
    p = x.p
    g = p.p
    if g is not None:
        if g.l is p:
            g.l = x
        else:
            g.r = x
    x.p = g
    if p.l is x:
        c = x.r
        p.l = c
        x.r = p
    else:
        c = x.l
        p.r = c
        x.l = p
    if c is not None:
        c.p = p
    p.p = x
    # inlined _upd(p)
    sc = p.cnt
    sf = p.tf
    s0 = p.n0
    s1 = p.n1
    mw = p.w
    wit = p if mw is not None else None
    a = p.l
    if a is not None:
        sc += a.sc
        sf += a.sf
        s0 += a.s0
        s1 += a.s1
        am = a.smw
        if am is not None and (mw is None or am > mw):
            mw = am
            wit = a.wit
    b = p.r
    if b is not None:
        sc += b.sc
        sf += b.sf
        s0 += b.s0
        s1 += b.s1
        bm = b.smw
        if bm is not None and (mw is None or bm > mw):
            mw = bm
            wit = b.wit
    p.sc = sc
    p.sf = sf
    p.s0 = s0
    p.s1 = s1
    p.smw = mw
    p.wit = wit


def _splay(x: _ENode) -> int:
    """Splay x to the root of its sequence; returns the number of rotations."""
    n = 0
    p = x.p
    while p is not None:
        g = p.p
        if g is None:
            _rot(x)
            n += 1
            break
        if (g.l is p) == (p.l is x):
            _rot(p)
        else:
            _rot(x)
        _rot(x)
        n += 2
        p = x.p
    _upd(x)
    return n


def _rightmost(x: _ENode) -> _ENode:
    while x.r is not None:
        x = x.r
    return x


class EtEdge:
    """Handle for a tree edge of an :class:`EulerTourForest`."""

    __slots__ = ("u", "v", "a1", "a2", "data", "alive")

    def __init__(self, u: int, v: int, data: Any) -> None:
        self.u = u
        self.v = v
        self.data = data
        self.alive = True
        self.a1: _ENode
        self.a2: _ENode

    @property
    def weight(self) -> Any:
        return self.a1.w

    def __repr__(self) -> str:
        return f"EtEdge({self.u}, {self.v}, w={self.a1.w!r}, data={self.data!r})"


class EulerTourForest:
    """Dynamic forest with whole-tree aggregates over vertices ``0..n-1``."""

    def __init__(self, n: int) -> None:
        self.n = n
        self._v: list[Optional[_ENode]] = [None] * n
        self.steps = 0

    def _node(self, v: int) -> _ENode:
        x = self._v[v]
        if x is None:
            x = self._v[v] = _ENode(vid=v)
        return x

    def has_node(self, v: int) -> bool:
        return self._v[v] is not None

    # -- splay machinery -------------------------------------------------

    def _splay(self, x: _ENode) -> None:
        self.steps += _splay(x)

    def _join(self, a: Optional[_ENode], b: Optional[_ENode]) -> Optional[_ENode]:
        """Concatenate two sequences given by their roots."""
        if a is None:
            return b
        if b is None:
            return a
        x = _rightmost(a)
        self.steps += _splay(x)
        x.r = b
        b.p = x
        _upd(x)
        return x

    # -- forest operations -----------------------------------------------

    def same_tree(self, u: int, v: int) -> bool:
        if u == v:
            return True
        nu, nv = self._v[u], self._v[v]
        if nu is None or nv is None:
            return False
        self.steps += _splay(nu) + _splay(nv)
        return nu.p is not None

    def link(self, u: int, v: int, w: Any = 0, data: Any = None,
             flag: bool = False, check: bool = True) -> EtEdge:
        """Join two trees by a new edge; ``w=None`` leaves it out of the max.

        ``check=False`` skips the cycle test for callers that already know.
        """
        if check and self.same_tree(u, v):
            raise CycleError(f"{u} and {v} are already in one tree")
        h = EtEdge(u, v, data)
        a1 = h.a1 = _ENode(edge=h, w=w)
        if flag:
            a1.tf = a1.sf = 1
        a2 = h.a2 = _ENode(edge=h)
        nu, nv = self._node(u), self._node(v)
        # tours are cyclic: the new sequence is  Lu a1 v (Rv Lv) a2 u Ru
        self.steps += _splay(nu)
        lu = nu.l
        self.steps += _splay(nv)
        lv, rv = nv.l, nv.r
        if lv is not None:
            lv.p = None
        if rv is not None:
            rv.p = None
        nv.l = None
        nv.r = self._join(rv, lv)
        if nv.r is not None:
            nv.r.p = nv
        _upd(nv)
        # nu is still the root of its own sequence
        if lu is not None:
            lu.p = None
        a1.l = lu
        if lu is not None:
            lu.p = a1
        a1.r = nv
        nv.p = a1
        _upd(a1)
        a2.l = a1
        a1.p = a2
        _upd(a2)
        nu.l = a2
        a2.p = nu
        nu.p = None
        _upd(nu)
        return h

    def cut(self, h: EtEdge) -> None:
        if not h.alive:
            raise StaleHandleError("tree edge already cut")
        a1, a2 = h.a1, h.a2
        self.steps += _splay(a2)
        y = a1
        while y.p is not a2:
            y = y.p
        if a2.l is y:
            # L a1 M a2 R
            right = a2.r
            rest = a2.l
            rest.p = None
            if right is not None:
                right.p = None
            self.steps += _splay(a1)
            left, mid = a1.l, a1.r
        else:
            # L a2 M a1 R
            left = a2.l
            rest = a2.r
            rest.p = None
            if left is not None:
                left.p = None
            self.steps += _splay(a1)
            mid, right = a1.l, a1.r
        if left is not None:
            left.p = None
        if mid is not None:
            mid.p = None
        if right is not None:
            right.p = None
        for a in (a1, a2):
            a.l = a.r = a.p = None
        self._join(left, right)
        h.alive = False

    def tree_size(self, v: int) -> int:
        x = self._v[v]
        if x is None:
            return 1
        self.steps += _splay(x)
        return x.sc

    def tree_max_edge(self, v: int) -> Optional[tuple[EtEdge, Any]]:
        x = self._v[v]
        if x is None:
            return None
        self.steps += _splay(x)
        if x.wit is None:
            return None
        return x.wit.edge, x.smw

    def set_weight(self, h: EtEdge, w: Any) -> None:
        a = h.a1
        self.steps += _splay(a)
        a.w = w
        _upd(a)

    def set_flag(self, h: EtEdge, flag: bool) -> None:
        a = h.a1
        self.steps += _splay(a)
        a.tf = 1 if flag else 0
        _upd(a)

    def add_counts(self, v: int, d0: int = 0, d1: int = 0) -> None:
        x = self._node(v)
        self.steps += _splay(x)
        x.n0 += d0
        x.n1 += d1
        _upd(x)

    def counts(self, v: int) -> tuple[int, int]:
        x = self._v[v]
        return (0, 0) if x is None else (x.n0, x.n1)

    def tree_totals(self, v: int) -> tuple[int, int, int]:
        """``(flagged arcs, class-0 count, class-1 count)`` of v's tree."""
        x = self._v[v]
        if x is None:
            return (0, 0, 0)
        self.steps += _splay(x)
        return x.sf, x.s0, x.s1

    def flagged_edges(self, v: int) -> list[EtEdge]:
        x = self._v[v]
        if x is None:
            return []
        self.steps += _splay(x)
        out = []
        stack = [x]
        while stack:
            y = stack.pop()
            if y.tf:
                out.append(y.edge)
            a, b = y.l, y.r
            if a is not None and a.sf:
                stack.append(a)
            if b is not None and b.sf:
                stack.append(b)
        return out

    def vertices_with(self, v: int, cls: int) -> list[int]:
        """Vertices of v's tree whose class-``cls`` counter is non-zero."""
        x = self._v[v]
        if x is None:
            return []
        self.steps += _splay(x)
        out = []
        stack = [x]
        if cls == 0:
            while stack:
                y = stack.pop()
                if y.n0:
                    out.append(y.vid)
                a, b = y.l, y.r
                if a is not None and a.s0:
                    stack.append(a)
                if b is not None and b.s0:
                    stack.append(b)
        else:
            while stack:
                y = stack.pop()
                if y.n1:
                    out.append(y.vid)
                a, b = y.l, y.r
                if a is not None and a.s1:
                    stack.append(a)
                if b is not None and b.s1:
                    stack.append(b)
        return out

    def tree_vertices(self, v: int) -> list[int]:
        x = self._v[v]
        if x is None:
            return [v]
        self.steps += _splay(x)
        out = []
        stack = [x]
        while stack:
            y = stack.pop()
            if y.cnt:
                out.append(y.vid)
            if y.l is not None:
                stack.append(y.l)
            if y.r is not None:
                stack.append(y.r)
        return out

    def tree_edges(self, v: int) -> list[EtEdge]:
        """Handles of all edges in v's tree."""
        x = self._v[v]
        if x is None:
            return []
        self.steps += _splay(x)
        out = []
        stack = [x]
        while stack:
            y = stack.pop()
            if y.vid < 0 and y.edge.a1 is y:
                out.append(y.edge)
            if y.l is not None:
                stack.append(y.l)
            if y.r is not None:
                stack.append(y.r)
        return out

    def tour(self, v: int) -> list[Any]:
        """The Euler tour of v's tree: vertex ids and ``(u, v)`` arc tuples."""
        x = self._v[v]
        if x is None:
            return [v]
        self.steps += _splay(x)
        out: list[Any] = []
        stack: list[Any] = []
        y: Optional[_ENode] = x
        while stack or y is not None:
            while y is not None:
                stack.append(y)
                y = y.l
            y = stack.pop()
            if y.vid >= 0:
                out.append(y.vid)
            else:
                h = y.edge
                out.append((h.u, h.v) if y is h.a1 else (h.v, h.u))
            y = y.r
        return out
