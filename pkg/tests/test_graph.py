import pytest

from streamvc.errors import (
    InvalidVertexError,
    NegativeMultiplicityError,
    SelfLoopError,
)
from streamvc.graph import (
    EdgeSet,
    MultiGraph,
    UnionFind,
    UpdateEvent,
    component_partition,
    replay_stream,
)
from streamvc.instances import gen_random_stream, legal_shuffle


def test_single_insertion():
    g = MultiGraph(3).apply(UpdateEvent(0, 1, 1))
    assert g.multiplicity(0, 1) == 1


def test_cancel_to_zero_removes_key():
    g = MultiGraph(3).apply(UpdateEvent(0, 1, 1)).apply(UpdateEvent(0, 1, -1))
    assert g.multiplicity(0, 1) == 0
    assert g.mult == {}


def test_negative_multiplicity_rejected():
    g = MultiGraph(3)
    with pytest.raises(NegativeMultiplicityError):
        g.apply(UpdateEvent(0, 1, -1))


def test_self_loop_rejected():
    with pytest.raises(SelfLoopError):
        MultiGraph(3).apply(UpdateEvent(2, 2, 1))


def test_out_of_range_endpoint_rejected():
    with pytest.raises(InvalidVertexError):
        MultiGraph(3).apply(UpdateEvent(0, 3, 1))


def test_bad_delta_rejected():
    with pytest.raises(ValueError):
        MultiGraph(3).apply(UpdateEvent(0, 1, 2))


def test_replay_parallel_edges():
    g = replay_stream([UpdateEvent(0, 1, 1), UpdateEvent(0, 1, 1)], 4)
    assert g.multiplicity(0, 1) == 2


def test_replay_empty_stream():
    g = replay_stream([], 5)
    assert g.n == 5 and g.mult == {}


def test_replay_insert_then_delete():
    events = [UpdateEvent(0, 1, 1), UpdateEvent(1, 2, 1), UpdateEvent(0, 1, -1)]
    g = replay_stream(events, 3)
    assert g.mult == {(1, 2): 1}


def test_replay_raises_at_first_illegal_prefix():
    events = [UpdateEvent(0, 1, 1), UpdateEvent(0, 1, -1), UpdateEvent(0, 1, -1)]
    with pytest.raises(NegativeMultiplicityError):
        replay_stream(events, 3)


def test_replay_permutation_invariant():
    events = gen_random_stream(12, 0.4, 0.3, seed=5)
    base = replay_stream(events, 12)
    for s in range(3):
        shuffled = legal_shuffle(events, seed=s)
        assert sorted(shuffled) == sorted(events)
        assert replay_stream(shuffled, 12) == base


def test_apply_then_inverse_restores():
    g = replay_stream(gen_random_stream(8, 0.5, 0.0, seed=1), 8)
    before = g.copy()
    g.apply(UpdateEvent(2, 5, 1)).apply(UpdateEvent(2, 5, -1))
    assert g == before


def test_support_collapses_multiplicity():
    g = replay_stream([UpdateEvent(0, 1, 1), UpdateEvent(0, 1, 1)], 3)
    assert g.support().edges == {(0, 1)}


def test_support_of_replay_matches_final_multiplicities():
    events = gen_random_stream(10, 0.4, 0.5, seed=9)
    g = replay_stream(events, 10)
    assert g.support().edges == {pair for pair, m in g.mult.items() if m >= 1}


def test_edge_set_normalizes_and_checks():
    es = EdgeSet(4)
    es.add(3, 1)
    assert (1, 3) in es and (3, 1) in es
    assert es.has(1, 3)
    with pytest.raises(SelfLoopError):
        es.add(2, 2)
    with pytest.raises(InvalidVertexError):
        es.add(0, 4)


def test_edge_set_induced_relabels():
    es = EdgeSet(6, [(0, 2), (2, 4), (4, 5), (1, 3)])
    sub = es.induced([0, 2, 4])
    assert sub.n == 3
    assert sub.edges == {(0, 1), (1, 2)}


def test_edge_set_degrees_and_adjacency():
    es = EdgeSet(4, [(0, 1), (1, 2)])
    assert es.degrees() == [1, 2, 1, 0]
    adj = es.adjacency()
    assert sorted(adj[1]) == [0, 2]


def test_union_find_basics():
    uf = UnionFind(5)
    assert uf.union(0, 1)
    assert not uf.union(1, 0)
    assert uf.find(0) == uf.find(1)
    assert uf.find(2) != uf.find(0)


def test_component_partition():
    part = component_partition(range(5), [(0, 1), (3, 4)])
    assert part == frozenset(
        {frozenset({0, 1}), frozenset({2}), frozenset({3, 4})}
    )
    restricted = component_partition([0, 1, 2], [(0, 1), (3, 4), (1, 4)])
    assert restricted == frozenset({frozenset({0, 1}), frozenset({2})})
