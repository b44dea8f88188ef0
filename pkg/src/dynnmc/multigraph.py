"""Small undirected multigraphs (parallel edges allowed, no self-loops)."""

from __future__ import annotations

from typing import Iterable, Optional

from .errors import SelfLoopError


class Multigraph:
    """Vertices ``0..n-1``; edge i joins ``edges[i]`` and carries ``labels[i]``."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 labels: Optional[Iterable] = None) -> None:
        self.n = n
        self.edges: list[tuple[int, int]] = []
        for a, b in edges:
            if a == b:
                raise SelfLoopError(f"self-loop at {a}")
            self.edges.append((a, b))
        self.labels = list(labels) if labels is not None else list(range(len(self.edges)))
        assert len(self.labels) == len(self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def add_edge(self, a: int, b: int, label=None) -> None:
        if a == b:
            raise SelfLoopError(f"self-loop at {a}")
        self.edges.append((a, b))
        self.labels.append(len(self.labels) if label is None else label)

    def weights(self) -> dict[tuple[int, int], int]:
        """Edge multiplicities keyed by ``(min, max)`` pairs."""
        w: dict[tuple[int, int], int] = {}
        for a, b in self.edges:
            key = (a, b) if a < b else (b, a)
            w[key] = w.get(key, 0) + 1
        return w

    def degrees(self) -> list[int]:
        d = [0] * self.n
        for a, b in self.edges:
            d[a] += 1
            d[b] += 1
        return d

    def components(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [s], [s]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def crossing(self, side: Iterable[int]) -> list[int]:
        """Indices of the edges with exactly one endpoint in ``side``."""
        s = set(side)
        return [i for i, (a, b) in enumerate(self.edges) if (a in s) != (b in s)]

    def induced(self, vertices: Iterable[int]) -> tuple["Multigraph", list[int]]:
        """Induced sub-multigraph on ``vertices`` and its vertex back-map."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        sub = Multigraph(len(vs))
        for (a, b), lab in zip(self.edges, self.labels):
            if a in index and b in index:
                sub.add_edge(index[a], index[b], lab)
        return sub, vs

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"
