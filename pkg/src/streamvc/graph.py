"""Graph and stream-event data model shared by all modules.

A dynamic stream is a sequence of UpdateEvent tuples whose running edge
multiplicities must stay non-negative at every prefix. Replaying a stream
yields a MultiGraph; collapsing multiplicities yields the simple EdgeSet
that connectivity computations operate on (parallel edges never change
vertex connectivity).
"""
from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

from .errors import InvalidVertexError, NegativeMultiplicityError, SelfLoopError


class UpdateEvent(NamedTuple):
    """One dynamic-stream tuple: endpoints i, j and a signed unit delta."""

    i: int
    j: int
    delta: int


def validate_event(e: UpdateEvent, n: int) -> None:
    """Reject self-loops, out-of-range endpoints and non-unit deltas."""
    if not (0 <= e.i < n) or not (0 <= e.j < n):
        raise InvalidVertexError(f"endpoints ({e.i},{e.j}) not in 0..{n - 1}")
    if e.i == e.j:
        raise SelfLoopError(f"self-loop at vertex {e.i}")
    if e.delta not in (1, -1):
        raise ValueError(f"delta must be +1 or -1, got {e.delta}")


def pair_key(u: int, v: int) -> tuple[int, int]:
    """Canonical unordered pair (min, max)."""
    return (u, v) if u < v else (v, u)


class MultiGraph:
    """Materialized multigraph with per-pair multiplicities."""

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self.mult: dict[tuple[int, int], int] = {}

    def apply(self, e: UpdateEvent) -> "MultiGraph":
        """Apply one update in place; multiplicities must stay >= 0."""
        validate_event(e, self.n)
        key = pair_key(e.i, e.j)
        new = self.mult.get(key, 0) + e.delta
        if new < 0:
            raise NegativeMultiplicityError(f"edge {key} would go negative")
        if new == 0:
            self.mult.pop(key, None)
        else:
            self.mult[key] = new
        return self

    def multiplicity(self, u: int, v: int) -> int:
        return self.mult.get(pair_key(u, v), 0)

    def support(self) -> "EdgeSet":
        """Simple graph underlying the multigraph (multiplicity >= 1)."""
        return EdgeSet(self.n, self.mult.keys())

    def copy(self) -> "MultiGraph":
        g = MultiGraph(self.n)
        g.mult = dict(self.mult)
        return g

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiGraph)
            and self.n == other.n
            and self.mult == other.mult
        )

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, edges={len(self.mult)})"


def replay_stream(events: Iterable[UpdateEvent], n: int) -> MultiGraph:
    """Materialize the multigraph defined by a legal dynamic stream."""
    g = MultiGraph(n)
    for e in events:
        g.apply(e)
    return g


class EdgeSet:
    """Simple undirected graph on vertices 0..n-1, stored as sorted pairs."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self.edges: set[tuple[int, int]] = set()
        for u, v in edges:
            self.add(u, v)

    def add(self, u: int, v: int) -> None:
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < self.n) or not (0 <= v < self.n):
            raise InvalidVertexError(f"edge ({u},{v}) not in 0..{self.n - 1}")
        self.edges.add(pair_key(u, v))

    def has(self, u: int, v: int) -> bool:
        return pair_key(u, v) in self.edges

    def __contains__(self, pair: tuple[int, int]) -> bool:
        return pair_key(*pair) in self.edges

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def induced(self, vertices: Iterable[int]) -> "EdgeSet":
        """Induced subgraph, relabelled densely in sorted vertex order."""
        verts = sorted(set(vertices))
        index = {v: i for i, v in enumerate(verts)}
        sub = EdgeSet(len(verts))
        for u, v in self.edges:
            if u in index and v in index:
                sub.add(index[u], index[v])
        return sub

    def is_subset_of(self, other: "EdgeSet") -> bool:
        return self.edges <= other.edges

    def copy(self) -> "EdgeSet":
        return EdgeSet(self.n, self.edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EdgeSet)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __repr__(self) -> str:
        return f"EdgeSet(n={self.n}, edges={len(self.edges)})"


class UnionFind:
    """Union-find over 0..n-1 with path compression and union by rank."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


def component_partition(vertices: Iterable[int], edges: Iterable[tuple[int, int]]):
    """Partition of `vertices` into connected components under `edges`.

    Edges with an endpoint outside `vertices` are ignored. Returns a
    canonical frozenset of frozensets, convenient for equality checks.
    """
    verts = sorted(set(vertices))
    index = {v: i for i, v in enumerate(verts)}
    uf = UnionFind(len(verts))
    for u, v in edges:
        if u in index and v in index:
            uf.union(index[u], index[v])
    groups: dict[int, set[int]] = {}
    for v in verts:
        groups.setdefault(uf.find(index[v]), set()).add(v)
    return frozenset(frozenset(g) for g in groups.values())
