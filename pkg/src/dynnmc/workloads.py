"""Random graph models for tests, benchmarks and generated streams."""

from __future__ import annotations

import random
from typing import Optional

Edges = list[tuple[int, int]]


def erdos_renyi(n: int, rng: random.Random, p: Optional[float] = None,
                m: Optional[int] = None) -> Edges:
    """G(n, p) when ``p`` is given, otherwise a uniform graph with ``m`` edges."""
    if p is not None:
        return [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    if m is None:
        raise ValueError("give p or m")
    total = n * (n - 1) // 2
    if m > total:
        raise ValueError(f"{m} edges do not fit in a simple graph on {n} vertices")
    if m > total // 2:
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
        return sorted(rng.sample(pairs, m))
    seen: set[tuple[int, int]] = set()
    while len(seen) < m:
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b:
            seen.add((a, b) if a < b else (b, a))
    return sorted(seen)


def near_regular(n: int, d: int, rng: random.Random) -> Edges:
    """A simple graph with every degree at least ``d`` and most exactly ``d``.

    Stubs are paired at random; loops and repeats are dropped and the
    missing degree is patched with fresh random edges.
    """
    if d >= n:
        raise ValueError(f"degree {d} impossible on {n} vertices")
    stubs = [v for v in range(n) for _ in range(d)]
    rng.shuffle(stubs)
    adj: list[set[int]] = [set() for _ in range(n)]
    for i in range(0, len(stubs) - 1, 2):
        a, b = stubs[i], stubs[i + 1]
        if a != b and b not in adj[a]:
            adj[a].add(b)
            adj[b].add(a)
    short = [v for v in range(n) if len(adj[v]) < d]
    while short:
        rng.shuffle(short)
        a = short[0]
        partner = None
        for b in short[1:]:
            if b not in adj[a]:
                partner = b
                break
        if partner is None:
            while True:
                b = rng.randrange(n)
                if b != a and b not in adj[a]:
                    partner = b
                    break
        adj[a].add(partner)
        adj[partner].add(a)
        short = [v for v in short if len(adj[v]) < d]
    return sorted((a, b) for a in range(n) for b in adj[a] if a < b)


def planted_cut(n: int, cut: int, d: int, rng: random.Random) -> Edges:
    """Two near-regular clusters of degree ``d`` joined by ``cut`` disjoint edges."""
    n1 = n // 2
    n2 = n - n1
    if cut > min(n1, n2) or d >= min(n1, n2):
        raise ValueError("clusters too small for the requested cut and degree")
    left = near_regular(n1, d, rng)
    right = [(a + n1, b + n1) for a, b in near_regular(n2, d, rng)]
    xs = rng.sample(range(n1), cut)
    ys = rng.sample(range(n1, n), cut)
    bridge = [(x, y) for x, y in zip(xs, ys)]
    return sorted(left + right + bridge)


def power_edges(n: int, exponent: float) -> int:
    return min(n * (n - 1) // 2, int(round(n ** exponent)))
