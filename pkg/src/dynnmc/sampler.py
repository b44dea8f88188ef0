"""Uniform sampling from a dynamic list.

Items live in an implicit complete binary tree (item ``i`` has children
``2i`` and ``2i+1``), threaded by one doubly linked list per tree level.
Appending and removing touch a constant number of pointers, and sampling
walks the binary digits of a uniform position from the root.
"""

from __future__ import annotations

from typing import Any, Iterator, Optional

from .errors import EmptyListError, StaleHandleError


class _Node:
    __slots__ = ("handle", "parent", "left", "right", "prev", "next", "depth")

    def __init__(self, handle: "Handle", depth: int) -> None:
        self.handle = handle
        self.parent: Optional[_Node] = None
        self.left: Optional[_Node] = None
        self.right: Optional[_Node] = None
        self.prev: Optional[_Node] = None
        self.next: Optional[_Node] = None
        self.depth = depth


class Handle:
    """Reference to a stored item; stays valid until the item is removed."""

    __slots__ = ("item", "_node", "_owner")

    def __init__(self, item: Any, owner: "SampledList") -> None:
        self.item = item
        self._node: Optional[_Node] = None
        self._owner: Optional[SampledList] = owner

    @property
    def live(self) -> bool:
        return self._node is not None

    def __repr__(self) -> str:
        return f"Handle({self.item!r}, live={self.live})"


class SampledList:
    """A list supporting O(1) append/remove and O(log l) uniform sampling.

    ``last_update_ops`` records the number of pointer writes performed by the
    most recent ``append`` or ``remove``; it is bounded by a constant.
    """

    def __init__(self) -> None:
        self._root: Optional[_Node] = None
        self._len = 0
        # level d (1-based) -> [head, tail]
        self._heads: list[Optional[_Node]] = []
        self._tails: list[Optional[_Node]] = []
        self.last_update_ops = 0

    def __len__(self) -> int:
        return self._len

    @property
    def levels(self) -> int:
        return len(self._heads)

    def append(self, item: Any) -> Handle:
        h = Handle(item, self)
        ops = 0
        if self._root is None:
            node = _Node(h, 1)
            self._root = node
            self._heads.append(node)
            self._tails.append(node)
            ops += 3
        else:
            last = self._tails[-1]
            p = last.parent
            if p is not None and p.left is last:
                node = _Node(h, last.depth)
                p.right = node
                node.parent = p
                ops += 2
            else:
                nxt = p.next if p is not None else None
                if nxt is not None:
                    node = _Node(h, last.depth)
                    nxt.left = node
                    node.parent = nxt
                    ops += 2
                else:
                    # deepest level is full: open a new one under its first entry
                    first = self._heads[-1]
                    node = _Node(h, last.depth + 1)
                    first.left = node
                    node.parent = first
                    self._heads.append(node)
                    self._tails.append(node)
                    self._len += 1
                    h._node = node
                    self.last_update_ops = ops + 5
                    return h
            tail = self._tails[-1]
            tail.next = node
            node.prev = tail
            self._tails[-1] = node
            ops += 3
        self._len += 1
        h._node = node
        self.last_update_ops = ops + 1
        return h

    def remove(self, h: Handle) -> Any:
        node = h._node
        if node is None or h._owner is not self:
            raise StaleHandleError("handle is not live in this list")
        last = self._tails[-1]
        ops = 0
        if last is not node:
            # move the last item into the vacated tree position
            moved = last.handle
            node.handle = moved
            moved._node = node
            ops += 2
        ops += self._detach_last(last)
        h._node = None
        h._owner = None
        self._len -= 1
        self.last_update_ops = ops + 2
        return h.item

    def _detach_last(self, last: _Node) -> int:
        ops = 0
        p = last.parent
        if p is None:
            self._root = None
        elif p.right is last:
            p.right = None
            ops += 1
        else:
            p.left = None
            ops += 1
        prev = last.prev
        if prev is None:
            self._heads.pop()
            self._tails.pop()
            ops += 2
        else:
            prev.next = None
            self._tails[-1] = prev
            ops += 2
        last.parent = last.prev = None
        last.handle = None  # type: ignore[assignment]
        return ops + 2

    def position_item(self, t: int) -> Any:
        """Item at 1-based tree position ``t`` reached by its digit path."""
        if not 1 <= t <= self._len:
            raise IndexError(t)
        node = self._root
        for bit in bin(t)[3:]:
            node = node.right if bit == "1" else node.left  # type: ignore[union-attr]
        return node.handle.item  # type: ignore[union-attr]

    def sample(self, rng) -> Any:
        """Uniformly random item; ``rng`` must provide ``randint(a, b)``."""
        if self._len == 0:
            raise EmptyListError("cannot sample from an empty list")
        return self.position_item(rng.randint(1, self._len))

    def __iter__(self) -> Iterator[Any]:
        """Items in tree-position order (level by level)."""
        for head in self._heads:
            node = head
            while node is not None:
                yield node.handle.item
                node = node.next

    def check_invariants(self) -> None:
        """Raise AssertionError if completeness or level threading is broken."""
        n = self._len
        assert len(self._heads) == (n).bit_length(), "level count"
        if n == 0:
            assert self._root is None
            return
        # walk by position: node at position p must be reached via digits of p
        by_level: list[list[_Node]] = [[] for _ in self._heads]
        stack = [(self._root, 1)]
        seen = 0
        while stack:
            node, pos = stack.pop()
            seen += 1
            assert pos <= n, "node beyond length"
            d = pos.bit_length()
            assert node.depth == d, "depth"
            by_level[d - 1].append((pos, node))  # type: ignore[arg-type]
            assert node.handle._node is node, "handle back-pointer"
            if node.left is not None:
                assert node.left.parent is node
                stack.append((node.left, 2 * pos))
            if node.right is not None:
                assert node.right.parent is node
                stack.append((node.right, 2 * pos + 1))
        assert seen == n, "node count"
        for d, entries in enumerate(by_level):
            entries.sort(key=lambda pn: pn[0])
            node = self._heads[d]
            prev = None
            for _, expect in entries:
                assert node is expect, "level list order"
                assert node.prev is prev
                prev, node = node, node.next
            assert node is None and self._tails[d] is prev
