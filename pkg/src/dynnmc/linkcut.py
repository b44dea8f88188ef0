"""Link-cut trees with path-maximum queries.

Each tree edge is represented by its own splay node sitting between its two
endpoints, so edge weights become node keys. Splay subtrees keep both the
leftmost and the rightmost maximum-weight witness; reversal swaps the two,
which keeps "closest to the root" tie-breaking correct after ``evert``.
Weights may be any mutually comparable values (ints, tuples).
"""

from __future__ import annotations

from typing import Any, Optional

from .errors import CycleError, StaleHandleError


class _LNode:
    __slots__ = ("l", "r", "p", "rev", "w", "mx", "lw", "rw", "sz", "vid")

    def __init__(self, w: Any = None, vid: int = -1) -> None:
        self.vid = vid
        self.l: Optional[_LNode] = None
        self.r: Optional[_LNode] = None
        self.p: Optional[_LNode] = None
        self.rev = False
        self.w = w
        self.mx = w
        self.lw: Optional[_LNode] = self if w is not None else None
        self.rw: Optional[_LNode] = self.lw
        self.sz = 1


class TreeEdgeHandle(_LNode):
    """A live tree edge of a :class:`LinkCutForest`."""

    __slots__ = ("u", "v", "data", "alive")

    def __init__(self, u: int, v: int, w: Any, data: Any = None) -> None:
        super().__init__(w)
        self.u = u
        self.v = v
        self.data = data
        self.alive = True

    @property
    def weight(self) -> Any:
        return self.w

    def __repr__(self) -> str:
        return f"TreeEdgeHandle({self.u}, {self.v}, w={self.w!r}, data={self.data!r})"


def _flip(x: _LNode) -> None:
    x.rev = not x.rev
    x.lw, x.rw = x.rw, x.lw


def _push(x: _LNode) -> None:
    if x.rev:
        a, b = x.l, x.r
        x.l, x.r = b, a
        if a is not None:
            _flip(a)
        if b is not None:
            _flip(b)
        x.rev = False


def _update(x: _LNode) -> None:
    a, b = x.l, x.r
    w = x.w
    sz = 1
    mx = w
    lw = rw = x if w is not None else None
    if a is not None:
        sz += a.sz
        am = a.mx
        if am is not None:
            if mx is None or am > mx:
                mx, lw, rw = am, a.lw, a.rw
            elif am == mx:
                lw = a.lw
    if b is not None:
        sz += b.sz
        bm = b.mx
        if bm is not None:
            if mx is None or bm > mx:
                mx, lw, rw = bm, b.lw, b.rw
            elif bm == mx:
                rw = b.rw
    x.sz = sz
    x.mx = mx
    x.lw = lw
    x.rw = rw


def _rot(x: _LNode) -> None:
    p = x.p
    g = p.p
    if g is not None:
        if g.l is p:
            g.l = x
        elif g.r is p:
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
    _update(p)


class LinkCutForest:
    """Rooted dynamic forest over vertices ``0..n-1``.

    ``steps`` counts splay rotations, for complexity measurements.
    """

    def __init__(self, n: int) -> None:
        self.n = n
        self._nodes = [_LNode(vid=i) for i in range(n)]
        self.steps = 0

    # -- splay machinery -------------------------------------------------

    def _splay(self, x: _LNode) -> None:
        path = [x]
        y = x
        while True:
            p = y.p
            if p is None or (p.l is not y and p.r is not y):
                break
            path.append(p)
            y = p
        for y in reversed(path):
            if y.rev:
                _push(y)
        n = 0
        while True:
            p = x.p
            if p is None or (p.l is not x and p.r is not x):
                break
            g = p.p
            if g is not None and (g.l is p or g.r is p):
                if (g.l is p) == (p.l is x):
                    _rot(p)
                else:
                    _rot(x)
                n += 1
            _rot(x)
            n += 1
        _update(x)
        self.steps += n

    def _access(self, x: _LNode) -> None:
        last = None
        y = x
        while y is not None:
            self._splay(y)
            y.r = last
            _update(y)
            last = y
            y = y.p
        self._splay(x)

    def _evert(self, x: _LNode) -> None:
        self._access(x)
        _flip(x)
        _push(x)

    def _root_of(self, x: _LNode) -> _LNode:
        self._access(x)
        y = x
        _push(y)
        while y.l is not None:
            y = y.l
            _push(y)
        self._splay(y)
        return y

    # -- public API ------------------------------------------------------

    def link(self, u: int, v: int, w: Any = 0, data: Any = None,
             check: bool = True) -> TreeEdgeHandle:
        """Add edge u-v; ``check=False`` trusts the caller that they are apart."""
        nu, nv = self._nodes[u], self._nodes[v]
        if u == v or (check and self._root_of(nu) is self._root_of(nv)):
            raise CycleError(f"{u} and {v} are already connected")
        h = TreeEdgeHandle(u, v, w, data)
        self._evert(nu)
        nu.p = h
        # h is now the root of u's tree and alone in its splay tree
        h.p = nv
        return h

    def cut(self, h: TreeEdgeHandle) -> None:
        if not h.alive:
            raise StaleHandleError("tree edge already cut")
        nu, nv = self._nodes[h.u], self._nodes[h.v]
        self._evert(nu)
        self._access(nv)
        # the root path is u, h, v: u and h form v's left subtree
        left = nv.l
        assert left is not None and left.sz == 2
        nv.l = None
        left.p = None
        _update(nv)
        if left.rev:
            _push(left)
        if left is nu:
            nu.r = None
        else:
            left.l = None
            nu.p = None
        _update(nu)
        h.p = h.l = h.r = None
        h.alive = False

    def evert(self, v: int) -> None:
        self._evert(self._nodes[v])

    def find_root(self, v: int) -> int:
        return self._root_of(self._nodes[v]).vid

    def connected(self, u: int, v: int) -> bool:
        if u == v:
            return True
        return self._root_of(self._nodes[u]) is self._root_of(self._nodes[v])

    def max_edge(self, v: int) -> Optional[tuple[TreeEdgeHandle, Any]]:
        """Maximum-weight edge on the root-to-``v`` path, closest to the root."""
        x = self._nodes[v]
        self._access(x)
        if x.mx is None:
            return None
        return x.lw, x.mx  # type: ignore[return-value]

    def path_max(self, u: int, v: int) -> Optional[tuple[TreeEdgeHandle, Any]]:
        """Maximum edge on the u-v path, closest to ``u``; reroots at ``u``."""
        self.evert(u)
        return self.max_edge(v)

    def _depth(self, x: _LNode) -> int:
        self._access(x)
        return x.l.sz if x.l is not None else 0

    def parent_side(self, h: TreeEdgeHandle) -> tuple[int, int]:
        """``(closer, farther)`` endpoints of ``h`` under the current root."""
        if not h.alive:
            raise StaleHandleError("tree edge already cut")
        du = self._depth(self._nodes[h.u])
        dv = self._depth(self._nodes[h.v])
        return (h.u, h.v) if du < dv else (h.v, h.u)

    def set_weight(self, h: TreeEdgeHandle, w: Any) -> None:
        if not h.alive:
            raise StaleHandleError("tree edge already cut")
        # aggregates only span splay subtrees, so a local splay suffices
        self._splay(h)
        h.w = w
        _update(h)
