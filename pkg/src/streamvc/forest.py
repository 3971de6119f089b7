"""Spanning forests of induced subgraphs extracted from per-vertex sketches.

Each member vertex keeps one sketch per round over the global edge-pair
universe, encoding its incidence vector antisymmetrically: edge {u,v}
with u < v adds +m at the pair index to u's sketch and -m to v's. Summing
the sketches of a connected component cancels internal edges, leaving
exactly the edges that leave the component, which is what each round of
the contraction samples. Rounds use independent sketch batteries so the
randomness consumed by earlier merge decisions never biases later
samples; components at least halve per successful round, so
ceil(log2 n) + 1 rounds suffice.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import EdgeSet, UnionFind, UpdateEvent, validate_event
from .l0 import FAIL, L0Sketch, NonZeroIndex, PRIME, sample_cells
from .seeds import derive_seed


def pair_index(u: int, v: int, n: int) -> int:
    """Compacted triangular index of the unordered pair {u,v}, u < v."""
    if u > v:
        u, v = v, u
    if not (0 <= u < v < n):
        raise ValueError(f"bad pair ({u},{v}) for n={n}")
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def pair_from_index(idx: int, n: int) -> tuple[int, int]:
    """Inverse of pair_index via binary search on row offsets."""
    total = n * (n - 1) // 2
    if not (0 <= idx < total):
        raise ValueError(f"pair index {idx} not in 0..{total - 1}")
    lo, hi = 0, n - 1  # row u satisfies offset(u) <= idx < offset(u+1)
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if mid * (2 * n - mid - 1) // 2 <= idx:
            lo = mid
        else:
            hi = mid
    u = lo
    v = idx - u * (2 * n - u - 1) // 2 + u + 1
    return u, v


def round_count(n: int) -> int:
    return max(1, math.ceil(math.log2(n))) + 1 if n > 1 else 1


@dataclass
class ForestExtraction:
    """Result of one extraction: the forest plus failure bookkeeping."""

    forest: EdgeSet
    sample_failures: int
    rounds_used: int

    @property
    def failed(self) -> bool:
        return self.sample_failures > 0


class ForestSketchBank:
    """Per-vertex sketch batteries for one induced subgraph's members.

    The per-sketch failure budget is the bank delta split over the at
    most t * |members| samples an extraction can draw (union bound).
    """

    def __init__(self, n: int, members, delta: float, seed: int):
        if not (0.0 < delta < 1.0):
            raise ValueError(f"delta must be in (0,1), got {delta}")
        self.n = n
        self.members = tuple(sorted(set(members)))
        for v in self.members:
            if not (0 <= v < n):
                raise ValueError(f"member {v} not in 0..{n - 1}")
        self._member_pos = {v: i for i, v in enumerate(self.members)}
        self.delta = delta
        self.seed = seed
        self.rounds = round_count(n)
        self.universe = max(1, n * (n - 1) // 2)
        samples = max(1, self.rounds * len(self.members))
        self._sketch_delta = min(0.5, delta / samples)
        self._batteries: list[list[L0Sketch]] = []
        for r in range(self.rounds):
            round_seed = derive_seed(seed, "round", r)
            self._batteries.append(
                [
                    L0Sketch(self.universe, self._sketch_delta, round_seed)
                    for _ in self.members
                ]
            )
        # per-round caches keyed by pair index: (active mask, z^index)
        self._cache: list[dict[int, tuple[np.ndarray, int]]] = [
            {} for _ in range(self.rounds)
        ]

    def update(self, e: UpdateEvent) -> "ForestSketchBank":
        """Fold one stream event in; no-op unless both endpoints are members."""
        validate_event(e, self.n)
        lo_pos = self._member_pos.get(min(e.i, e.j))
        hi_pos = self._member_pos.get(max(e.i, e.j))
        if lo_pos is None or hi_pos is None:
            return self
        idx = pair_index(e.i, e.j, self.n)
        for r in range(self.rounds):
            battery = self._batteries[r]
            cached = self._cache[r].get(idx)
            if cached is None:
                mask = battery[0].active_mask(idx)
                zp = battery[0].zpow(idx)
                self._cache[r][idx] = (mask, zp)
            else:
                mask, zp = cached
            battery[lo_pos].apply_masked(mask, idx, e.delta, zp)
            battery[hi_pos].apply_masked(mask, idx, -e.delta, zp)
        return self

    def extract(self) -> ForestExtraction:
        """Recover a spanning forest of the induced subgraph on the members.

        Contraction rounds: merge each current component's round-r
        sketches, sample one outgoing edge per component, union the
        sampled edges. Stops early once a round samples nothing. Sample
        failures (and any decode whose endpoints fall outside the member
        set, which the fingerprint makes astronomically unlikely) are
        counted, not fatal.
        """
        members = self.members
        forest = EdgeSet(self.n)
        if len(members) <= 1:
            return ForestExtraction(forest, 0, 0)
        uf = UnionFind(len(members))
        failures = 0
        rounds_used = 0
        for r in range(self.rounds):
            comps: dict[int, list[int]] = {}
            for pos in range(len(members)):
                comps.setdefault(uf.find(pos), []).append(pos)
            if len(comps) == 1:
                break
            rounds_used += 1
            battery = self._batteries[r]
            sampled: list[tuple[int, int]] = []
            for root in sorted(comps):
                positions = comps[root]
                outcome = self._sample_component(battery, positions)
                if outcome is FAIL:
                    failures += 1
                elif isinstance(outcome, NonZeroIndex):
                    u, v = pair_from_index(outcome.index, self.n)
                    if u in self._member_pos and v in self._member_pos:
                        sampled.append((u, v))
                    else:
                        failures += 1
            if not sampled:
                break
            for u, v in sampled:
                if uf.union(self._member_pos[u], self._member_pos[v]):
                    forest.add(u, v)
        return ForestExtraction(forest, failures, rounds_used)

    def _sample_component(self, battery: list[L0Sketch], positions: list[int]):
        if len(positions) == 1:
            sk = battery[positions[0]]
            return sample_cells(
                sk.counts, sk.index_sums, sk.fingerprints, sk.z, sk.universe
            )
        first = battery[positions[0]]
        counts = first.counts.copy()
        isums = first.index_sums.copy()
        fps = first.fingerprints.copy()
        for pos in positions[1:]:
            sk = battery[pos]
            counts += sk.counts
            isums += sk.index_sums
            fps = (fps + sk.fingerprints) % PRIME
        return sample_cells(counts, isums, fps, first.z, first.universe)

    def serialized_size(self) -> int:
        return sum(sk.serialized_size() for bat in self._batteries for sk in bat)

    def sketch(self, vertex: int, round_: int) -> L0Sketch:
        """Direct access to one member's round battery (tests, demos)."""
        return self._batteries[round_][self._member_pos[vertex]]
