import random

import pytest

from matchsign.errors import (
    BadVertexLabel,
    DuplicateEdgeId,
    EdgeIdGap,
    LoopEdge,
    TooManyMatchings,
    UnknownEdgeId,
    WeightError,
)
from matchsign.graph import (
    Edge,
    Graph,
    check_weights,
    complete_bipartite_33,
    complete_graph,
    cycle_graph,
    enumerate_perfect_matchings,
    grid_graph,
    is_perfect_matching,
    path_graph,
    unit_weights,
    wheel_graph,
)
from matchsign.ring import ZERO

from oracles import brute_matchings


@pytest.fixture
def c4():
    return Graph.from_pairs(4, [(1, 2), (2, 3), (3, 4), (1, 4)])


def test_validate_ok():
    g = Graph(2, [Edge(1, 1, 2)])
    assert g.n == 2 and len(g.edges) == 1


def test_loop_rejected():
    with pytest.raises(LoopEdge):
        Graph(3, [Edge(1, 3, 3)])


def test_duplicate_id_rejected():
    with pytest.raises(DuplicateEdgeId):
        Graph(3, [Edge(1, 1, 2), Edge(1, 2, 3)])


def test_bad_vertex_and_gap():
    with pytest.raises(BadVertexLabel):
        Graph(2, [Edge(1, 1, 3)])
    with pytest.raises(EdgeIdGap):
        Graph(3, [Edge(1, 1, 2), Edge(3, 2, 3)])


def test_edges_normalized_and_sorted():
    g = Graph(3, [Edge(2, 3, 1), Edge(1, 2, 1)])
    assert [(e.id, e.u, e.v) for e in g.edges] == [(1, 1, 2), (2, 1, 3)]


def test_is_perfect_matching(c4):
    e12, e23, e34 = 1, 2, 3
    assert is_perfect_matching(c4, {e12, e34})
    assert not is_perfect_matching(c4, {e12, e23})
    assert not is_perfect_matching(c4, {e12})
    with pytest.raises(UnknownEdgeId):
        is_perfect_matching(c4, {9})


def test_enumerate_examples(c4):
    assert enumerate_perfect_matchings(Graph.from_pairs(2, [(1, 2)])) == [(1,)]
    assert enumerate_perfect_matchings(c4) == [(1, 3), (2, 4)]
    assert len(enumerate_perfect_matchings(complete_bipartite_33())) == 6
    assert enumerate_perfect_matchings(path_graph(5)) == []
    assert enumerate_perfect_matchings(Graph(0, [])) == [()]


def test_parallel_edges_are_distinct_matchings():
    g = Graph.from_pairs(4, [(1, 2), (1, 2), (3, 4)])
    assert enumerate_perfect_matchings(g) == [(1, 3), (2, 3)]


def test_matching_cap():
    with pytest.raises(TooManyMatchings):
        enumerate_perfect_matchings(complete_graph(8), max_matchings=100)


@pytest.mark.parametrize("seed", range(60))
def test_enumeration_equals_subset_scan(seed):
    rng = random.Random(seed)
    n = rng.choice([1, 2, 3, 4, 5, 6, 7, 8, 9, 10])
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < 0.45]
    g = Graph.from_pairs(n, pairs)
    got = enumerate_perfect_matchings(g)
    assert all(is_perfect_matching(g, m) for m in got)
    expected = sorted(tuple(k + 1 for k in sub) for sub in brute_matchings(n, pairs))
    assert got == expected
    assert got == sorted(got)
    if n % 2:
        assert got == []


@pytest.mark.parametrize(
    "g,count",
    [
        (path_graph(6), 1),
        (cycle_graph(6), 2),
        (complete_graph(6), 15),
        (grid_graph(2, 3), 3),
        (wheel_graph(6), None),
    ],
)
def test_families(g, count):
    pairs = [e.ends for e in g.edges]
    expected = len(brute_matchings(g.n, pairs))
    got = len(enumerate_perfect_matchings(g))
    assert got == expected
    if count is not None:
        assert got == count


def test_weights_checked(c4):
    check_weights(c4, unit_weights(c4))
    w = unit_weights(c4)
    w[2] = ZERO
    with pytest.raises(WeightError):
        check_weights(c4, w)
    del w[2]
    with pytest.raises(WeightError):
        check_weights(c4, w)
