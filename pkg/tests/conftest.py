"""Shared test fixtures and independent brute-force oracles.

The brute-force routines here deliberately avoid the flow machinery they
are used to check: global connectivity is found by enumerating removal
sets, and disjoint-path counts by packing explicitly enumerated simple
paths.
"""
from __future__ import annotations

from collections import deque
from itertools import combinations

import numpy as np
import pytest

from streamvc.graph import EdgeSet


def is_connected(adj, alive) -> bool:
    """BFS connectivity over the vertices marked alive (>= 1 expected)."""
    live = [v for v in range(len(adj)) if alive[v]]
    if len(live) <= 1:
        return True
    seen = {live[0]}
    queue = deque([live[0]])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if alive[v] and v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == len(live)


def brute_vertex_connectivity(g: EdgeSet) -> int:
    """Smallest removal set that disconnects the rest; n-1 when none exists."""
    adj = g.adjacency()
    n = g.n
    for size in range(0, n - 1):
        for cut in combinations(range(n), size):
            alive = [True] * n
            for v in cut:
                alive[v] = False
            if not is_connected(adj, alive):
                return size
    return n - 1


def brute_min_st_separator(g: EdgeSet, s: int, t: int) -> int:
    """Minimum vertex set (excluding s, t) separating non-adjacent s and t."""
    assert not g.has(s, t)
    adj = g.adjacency()
    others = [v for v in range(g.n) if v not in (s, t)]
    for size in range(0, len(others) + 1):
        for cut in combinations(others, size):
            alive = [True] * g.n
            for v in cut:
                alive[v] = False
            if not _st_reachable(adj, alive, s, t):
                return size
    raise AssertionError("adjacent pair passed to separator search")


def _st_reachable(adj, alive, s, t) -> bool:
    seen = {s}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        if u == t:
            return True
        for v in adj[u]:
            if alive[v] and v not in seen:
                seen.add(v)
                queue.append(v)
    return t in seen


def brute_max_disjoint_paths(g: EdgeSet, s: int, t: int) -> int:
    """Max packing of internally vertex-disjoint s-t paths (tiny graphs).

    Enumerates every simple s-t path, then searches the largest family
    with pairwise disjoint interiors.
    """
    adj = g.adjacency()
    paths: list[frozenset[int]] = []

    def walk(u, interior, seen):
        for v in adj[u]:
            if v == t:
                paths.append(frozenset(interior))
            elif v != s and v not in seen:
                walk(v, interior + [v], seen | {v})

    walk(s, [], {s})

    best = 0

    def pack(start, used, size):
        nonlocal best
        best = max(best, size)
        for i in range(start, len(paths)):
            if not (paths[i] & used):
                pack(i + 1, used | paths[i], size + 1)

    pack(0, frozenset(), 0)
    return best


def random_edge_set(n: int, p: float, rng: np.random.Generator) -> EdgeSet:
    g = EdgeSet(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add(u, v)
    return g


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240811)
