import numpy as np
import pytest

from streamvc.forest import (
    ForestSketchBank,
    pair_from_index,
    pair_index,
    round_count,
)
from streamvc.graph import (
    EdgeSet,
    UnionFind,
    UpdateEvent,
    component_partition,
    replay_stream,
)
from streamvc.instances import gen_random_stream
from streamvc.l0 import NonZeroIndex


def bank_states_equal(a: ForestSketchBank, b: ForestSketchBank) -> bool:
    for r in range(a.rounds):
        for v in a.members:
            x, y = a.sketch(v, r), b.sketch(v, r)
            if not (
                np.array_equal(x.counts, y.counts)
                and np.array_equal(x.index_sums, y.index_sums)
                and np.array_equal(x.fingerprints, y.fingerprints)
            ):
                return False
    return True


def test_pair_index_bijection():
    for n in range(2, 13):
        seen = []
        for u in range(n):
            for v in range(u + 1, n):
                idx = pair_index(u, v, n)
                assert pair_from_index(idx, n) == (u, v)
                seen.append(idx)
        assert sorted(seen) == list(range(n * (n - 1) // 2))
        assert pair_index(1, 0, n) == pair_index(0, 1, n)


def test_pair_index_validation():
    with pytest.raises(ValueError):
        pair_index(2, 2, 5)
    with pytest.raises(ValueError):
        pair_from_index(10, 5)


def test_round_count():
    assert round_count(64) == 7
    assert round_count(2) == 2
    assert round_count(1) == 1


def test_empty_and_singleton_members():
    bank = ForestSketchBank(8, [], 0.01, seed=0)
    ext = bank.extract()
    assert len(ext.forest) == 0 and ext.sample_failures == 0

    bank = ForestSketchBank(8, [3], 0.01, seed=0)
    bank.update(UpdateEvent(3, 4, 1))
    ext = bank.extract()
    assert len(ext.forest) == 0


def test_update_ignores_non_member_edges():
    bank = ForestSketchBank(8, [0, 1, 2], 0.01, seed=1)
    fresh = ForestSketchBank(8, [0, 1, 2], 0.01, seed=1)
    bank.update(UpdateEvent(0, 5, 1))  # 5 is not a member
    bank.update(UpdateEvent(6, 7, 1))
    assert bank_states_equal(bank, fresh)


def test_update_insert_delete_bit_identical():
    bank = ForestSketchBank(8, [0, 1, 2], 0.01, seed=2)
    fresh = ForestSketchBank(8, [0, 1, 2], 0.01, seed=2)
    bank.update(UpdateEvent(0, 1, 1))
    bank.update(UpdateEvent(0, 1, -1))
    assert bank_states_equal(bank, fresh)


def test_update_accumulates_multiplicity_antisymmetrically():
    bank = ForestSketchBank(8, [0, 1], 0.01, seed=3)
    bank.update(UpdateEvent(0, 1, 1))
    bank.update(UpdateEvent(1, 0, 1))  # same unordered pair
    idx = pair_index(0, 1, 8)
    lo = bank.sketch(0, 0)
    hi = bank.sketch(1, 0)
    # level 0 sees every index: net +2 on the small endpoint, -2 on the large
    assert lo.counts[:, 0].tolist() == [2] * lo.reps
    assert hi.counts[:, 0].tolist() == [-2] * hi.reps
    assert lo.index_sums[0, 0] == 2 * idx


def test_component_merge_support_is_outgoing_edges():
    # merging all sketches of a component must cancel its internal edges
    n = 8
    members = [0, 1, 2, 3]
    edges = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 6), (4, 5)]
    bank = ForestSketchBank(n, members, 0.01, seed=4)
    for u, v in edges:
        bank.update(UpdateEvent(u, v, 1))
    component = [0, 1, 2]
    merged = bank.sketch(component[0], 0).copy()
    for v in component[1:]:
        merged = merged.merge(bank.sketch(v, 0))
    # dense reference: sum the antisymmetric incidence vectors directly
    dense = {}
    for u, v in edges:
        if u in members and v in members:
            lo, hi = min(u, v), max(u, v)
            idx = pair_index(lo, hi, n)
            for vert, sign in ((lo, 1), (hi, -1)):
                if vert in component:
                    dense[idx] = dense.get(idx, 0) + sign
    dense = {i: c for i, c in dense.items() if c}
    assert set(dense) == {pair_index(2, 3, n)}
    out = merged.sample()
    assert isinstance(out, NonZeroIndex)
    assert out.index == pair_index(2, 3, n)


def test_triangle_extracts_spanning_tree():
    bank = ForestSketchBank(8, [0, 1, 2], 0.001, seed=5)
    for u, v in [(0, 1), (1, 2), (0, 2)]:
        bank.update(UpdateEvent(u, v, 1))
    ext = bank.extract()
    assert len(ext.forest) == 2
    assert component_partition([0, 1, 2], ext.forest.edges) == frozenset(
        {frozenset({0, 1, 2})}
    )


def test_two_components_extract_exactly_the_edge():
    bank = ForestSketchBank(8, [0, 1, 4], 0.001, seed=6)
    bank.update(UpdateEvent(0, 1, 1))
    ext = bank.extract()
    assert ext.forest.edges == {(0, 1)}


def test_extraction_deterministic():
    events = gen_random_stream(16, 0.3, 0.2, seed=7)
    banks = []
    for _ in range(2):
        bank = ForestSketchBank(16, range(0, 16, 2), 0.01, seed=8)
        for e in events:
            bank.update(e)
        banks.append(bank.extract())
    assert banks[0].forest == banks[1].forest
    assert banks[0].sample_failures == banks[1].sample_failures


def test_extraction_montecarlo_partitions(rng):
    trials, matches = 60, 0
    for t in range(trials):
        n = 32
        events = gen_random_stream(n, 0.08, 0.25, seed=900 + t)
        members = sorted(
            int(v) for v in rng.choice(n, size=int(rng.integers(8, n)), replace=False)
        )
        bank = ForestSketchBank(n, members, 0.01, seed=t)
        for e in events:
            bank.update(e)
        ext = bank.extract()
        g = replay_stream(events, n).support()
        member_set = set(members)
        induced = [
            (u, v) for u, v in g.edges if u in member_set and v in member_set
        ]
        # soundness always: reported edges are real member-member edges
        assert ext.forest.edges <= set(induced)
        # acyclicity always
        uf = UnionFind(n)
        assert all(uf.union(u, v) for u, v in ext.forest.edges)
        if component_partition(members, ext.forest.edges) == component_partition(
            members, induced
        ):
            matches += 1
    assert matches >= trials - 1


def test_rounds_use_independent_batteries():
    # each contraction round owns fresh randomness: seeds, hashes and
    # fingerprint bases all differ across rounds, match across vertices
    bank = ForestSketchBank(16, [0, 1, 2, 3], 0.01, seed=10)
    seeds = {bank.sketch(0, r).seed for r in range(bank.rounds)}
    assert len(seeds) == bank.rounds
    zs = {bank.sketch(0, r).z for r in range(bank.rounds)}
    assert len(zs) == bank.rounds
    for r in range(bank.rounds):
        assert bank.sketch(0, r).seed == bank.sketch(3, r).seed
        assert bank.sketch(0, r).z == bank.sketch(3, r).z


def test_bank_serialized_size_counts_all_sketches():
    bank = ForestSketchBank(8, [0, 1, 2], 0.01, seed=9)
    one = bank.sketch(0, 0).serialized_size()
    assert bank.serialized_size() == one * 3 * bank.rounds
