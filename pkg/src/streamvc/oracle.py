"""Exact vertex-connectivity computations via unit-capacity max-flow.

Counting internally vertex-disjoint s-t paths reduces to max-flow on the
standard vertex-split network: every vertex v other than s, t becomes an
arc v_in -> v_out of capacity one, each undirected edge becomes a pair of
opposite arcs between the split halves, and a direct {s,t} edge becomes a
single unit arc contributing exactly one path. Edge arcs get a large
capacity so minimum cuts consist of internal arcs only, which is what
makes vertex-cut extraction from residual reachability exact.

Global connectivity is the minimum of the pairwise values over
non-adjacent pairs (n-1 for complete graphs). The boolean k-connectivity
query additionally uses the Menger-style observation that any vertex cut
of size < k misses at least one of any k+1 fixed vertices, so flows from
k+1 pivots to their non-neighbours suffice; the exhaustive pairwise scan
and this shortcut are cross-checked in the test suite.
"""
from __future__ import annotations

from collections import deque
from itertools import combinations

from .errors import InvalidVertexError
from .graph import EdgeSet, component_partition

_BIG = 1 << 30


class _SplitFlow:
    """Unit-capacity vertex-split flow network for one (s, t) query.

    Node ids: 2v = v_in, 2v+1 = v_out; source is s_out, sink is t_in.
    """

    def __init__(self, adj: list[list[int]], s: int, t: int):
        n = len(adj)
        self.num_nodes = 2 * n
        self.source = 2 * s + 1
        self.sink = 2 * t
        self.to: list[int] = []
        self.cap: list[int] = []
        self.head: list[list[int]] = [[] for _ in range(self.num_nodes)]
        for v in range(n):
            if v != s and v != t:
                self._arc(2 * v, 2 * v + 1, 1)
        for u in range(n):
            for v in adj[u]:
                # one directed arc per orientation; skip arcs into the
                # source side or out of the sink side, they cannot carry flow
                if v == s or u == t:
                    continue
                capacity = 1 if (u == s and v == t) else _BIG
                self._arc(2 * u + 1, 2 * v, capacity)

    def _arc(self, a: int, b: int, capacity: int) -> None:
        self.head[a].append(len(self.to))
        self.to.append(b)
        self.cap.append(capacity)
        self.head[b].append(len(self.to))
        self.to.append(a)
        self.cap.append(0)

    def _levels(self) -> list[int] | None:
        level = [-1] * self.num_nodes
        level[self.source] = 0
        queue = deque([self.source])
        to, cap, head = self.to, self.cap, self.head
        while queue:
            u = queue.popleft()
            if u == self.sink:
                return level
            for a in head[u]:
                v = to[a]
                if level[v] < 0 and cap[a] > 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return None

    def _augment(self, level: list[int], ptr: list[int]) -> int:
        """Find one augmenting path in the level graph; unit flow."""
        to, cap, head = self.to, self.cap, self.head
        sink = self.sink
        path: list[int] = []
        u = self.source
        while True:
            if u == sink:
                for a in path:
                    cap[a] -= 1
                    cap[a ^ 1] += 1
                return 1
            advanced = False
            while ptr[u] < len(head[u]):
                a = head[u][ptr[u]]
                v = to[a]
                if cap[a] > 0 and level[v] == level[u] + 1:
                    path.append(a)
                    u = v
                    advanced = True
                    break
                ptr[u] += 1
            if not advanced:
                if not path:
                    return 0
                level[u] = -1  # dead end, prune
                a = path.pop()
                u = to[a ^ 1]
                ptr[u] += 1

    def max_flow(self, limit: int) -> int:
        flow = 0
        while flow < limit:
            level = self._levels()
            if level is None:
                break
            ptr = [0] * self.num_nodes
            while flow < limit:
                pushed = self._augment(level, ptr)
                if pushed == 0:
                    break
                flow += pushed
        return flow

    def residual_reachable(self) -> list[bool]:
        seen = [False] * self.num_nodes
        seen[self.source] = True
        queue = deque([self.source])
        to, cap, head = self.to, self.cap, self.head
        while queue:
            u = queue.popleft()
            for a in head[u]:
                v = to[a]
                if cap[a] > 0 and not seen[v]:
                    seen[v] = True
                    queue.append(v)
        return seen


def max_vertex_disjoint_paths(
    g: EdgeSet, s: int, t: int, cap: int | None = None
) -> int:
    """Maximum number of internally vertex-disjoint s-t paths.

    A direct {s,t} edge counts as one path. With `cap` set, counting stops
    early and the returned value is min(true value, cap).
    """
    if not (0 <= s < g.n) or not (0 <= t < g.n):
        raise InvalidVertexError(f"vertices ({s},{t}) not in 0..{g.n - 1}")
    if s == t:
        raise ValueError("s and t must differ")
    limit = g.n if cap is None else max(0, min(cap, g.n))
    if limit == 0:
        return 0
    net = _SplitFlow(g.adjacency(), s, t)
    return net.max_flow(limit)


def vertex_connectivity(g: EdgeSet) -> int:
    """Exact vertex connectivity; n-1 for complete graphs, 0 if disconnected.

    Minimum of max_vertex_disjoint_paths over all non-adjacent pairs, with
    a running cutoff so later pairs stop augmenting once they cannot lower
    the minimum.
    """
    if g.n < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    best = g.n - 1
    adj = g.adjacency()
    complete = True
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if g.has(s, t):
                continue
            complete = False
            net = _SplitFlow(adj, s, t)
            best = min(best, net.max_flow(best))
            if best == 0:
                return 0
    return g.n - 1 if complete else best


def is_k_connected(g: EdgeSet, k: int) -> bool:
    """True iff vertex_connectivity(g) >= k.

    Short-circuits on min degree < k; k > n-1 is trivially false (which
    also covers single-vertex graphs, whose connectivity we leave
    undefined). Uses flows from k+1 fixed pivot vertices: any cut of size
    < k misses one pivot, which then sees a deficient non-neighbour.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k > g.n - 1:
        return False
    deg = g.degrees()
    if min(deg) < k:
        return False
    adj = g.adjacency()
    for s in range(k + 1):
        neighbours = set(adj[s])
        for t in range(g.n):
            if t == s or t in neighbours:
                continue
            if _SplitFlow(adj, s, t).max_flow(k) < k:
                return False
    return True


def find_vertex_cut(g: EdgeSet, k: int) -> set[int] | None:
    """Minimum vertex cut if connectivity is below k, else None.

    The cut is read off the residual reachability of the minimum s-t flow
    for the lexicographically first non-adjacent pair achieving the global
    minimum: X = {v : v_in reachable, v_out not}. A disconnected graph
    yields the empty cut; a complete graph below k returns all vertices
    but one (removal leaves a singleton).
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if g.n < 2:
        raise ValueError("vertex cuts need at least 2 vertices")
    if is_k_connected(g, k):
        return None
    adj = g.adjacency()
    pairs = [
        (s, t)
        for s in range(g.n)
        for t in range(s + 1, g.n)
        if not g.has(s, t)
    ]
    if not pairs:
        return set(range(1, g.n))
    kappa = min(g.n - 1, k - 1)
    for s, t in pairs:
        kappa = min(kappa, _SplitFlow(adj, s, t).max_flow(kappa))
        if kappa == 0:
            break
    for s, t in pairs:
        net = _SplitFlow(adj, s, t)
        if net.max_flow(kappa + 1) == kappa:
            seen = net.residual_reachable()
            cut = {
                v
                for v in range(g.n)
                if v != s and v != t and seen[2 * v] and not seen[2 * v + 1]
            }
            assert len(cut) == kappa, "residual cut size mismatch"
            return cut
    raise AssertionError("no pair achieved the computed minimum")


def _k_core(g: EdgeSet, k: int) -> set[int]:
    deg = g.degrees()
    adj = g.adjacency()
    alive = [True] * g.n
    queue = deque(v for v in range(g.n) if deg[v] < k)
    while queue:
        v = queue.popleft()
        if not alive[v]:
            continue
        alive[v] = False
        for u in adj[v]:
            if alive[u]:
                deg[u] -= 1
                if deg[u] < k:
                    queue.append(u)
    return {v for v in range(g.n) if alive[v]}


def has_k_connected_subgraph(g: EdgeSet, k: int) -> bool:
    """True iff some induced subgraph on >= k+1 vertices is k-connected.

    Brute force, guarded to n <= 12. Any k-connected subgraph has min
    degree >= k inside its vertex set, so it lies within the k-core and
    within one core component; enumeration is restricted accordingly and
    runs from large subsets down for early exit. Induced subgraphs suffice
    because adding back induced edges never lowers connectivity.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if g.n > 12:
        raise ValueError(f"brute-force guard: n={g.n} exceeds 12")
    core = _k_core(g, k)
    low = max(k + 1, 2)
    if len(core) < low:
        return False
    for comp_frozen in _core_components(g, core):
        comp = sorted(comp_frozen)
        if len(comp) < low:
            continue
        for size in range(len(comp), low - 1, -1):
            for subset in combinations(comp, size):
                sub = g.induced(subset)
                if min(sub.degrees()) < k:
                    continue
                if is_k_connected(sub, k):
                    return True
    return False


def _core_components(g: EdgeSet, core: set[int]):
    edges = [(u, v) for u, v in g.edges if u in core and v in core]
    return component_partition(core, edges)


def removal_disconnects(g: EdgeSet, cut: set[int]) -> bool:
    """Whether deleting `cut` disconnects g (or leaves fewer than 2 vertices)."""
    remaining = [v for v in range(g.n) if v not in cut]
    if len(remaining) <= 1:
        return True
    adj = g.adjacency()
    start = remaining[0]
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in cut and v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) < len(remaining)
