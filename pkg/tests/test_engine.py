import random

import pytest

from matchsign.embedding import CrossingProfile, stembridge_profile, zero_profile
from matchsign.engine import (
    SkewMatrix,
    crossing_number,
    determinant,
    matching_sign,
    matching_sum,
    matching_weight,
    pfaffian_expand,
    pfaffian_of_graph,
    signed_sum,
    skew_from_graph,
)
from matchsign.errors import NotSimpleGraph
from matchsign.graph import (
    Graph,
    complete_bipartite_33,
    complete_graph,
    cycle_graph,
    enumerate_perfect_matchings,
    grid_graph,
    path_graph,
    symbolic_weights,
    unit_weights,
    wheel_graph,
)
from matchsign.randomized import (
    random_int_weights,
    random_order,
    random_profile,
    random_simple_graph,
    random_skew_matrix,
)
from matchsign.ring import ONE, ZERO, parse, var

from oracles import brute_matchings, det_leibniz, pfaffian_by_pairings


def _k2():
    return Graph.from_pairs(2, [(1, 2)])


def test_crossing_number_examples():
    g = complete_graph(6)
    p = stembridge_profile(g)
    m = [g.find_edge(1, 4), g.find_edge(2, 5), g.find_edge(3, 6)]
    assert crossing_number(m, zero_profile(g)) == 0
    assert crossing_number(m, p) == 3
    assert crossing_number([g.find_edge(1, 2), g.find_edge(3, 4), g.find_edge(5, 6)], p) == 0


def test_self_crossings_ignored():
    p = CrossingProfile({(1, 2): 1}, {1: 5, 2: 1})
    assert crossing_number([1, 2], p) == 1


@pytest.mark.parametrize("c,sign", [(0, 1), (3, -1), (6, 1)])
def test_matching_sign_by_count(c, sign):
    assert matching_sign([1, 2], CrossingProfile({(1, 2): c})) == sign


def test_matching_weight():
    g = cycle_graph(4)
    assert matching_weight((1, 3), unit_weights(g)) == ONE
    assert matching_weight((1, 3), symbolic_weights(g)) == parse("x1*x3")
    assert matching_weight((2,), {2: -var(2)}) == parse("-x2")


def test_matching_sum_examples():
    assert matching_sum(_k2(), unit_weights(_k2())) == 1
    assert matching_sum(cycle_graph(4), unit_weights(cycle_graph(4))) == 2
    g = grid_graph(2, 3)
    assert matching_sum(g, unit_weights(g)) == len(brute_matchings(6, [e.ends for e in g.edges])) == 3
    assert matching_sum(path_graph(3), unit_weights(path_graph(3))) == ZERO


def test_signed_sum_examples():
    g = complete_bipartite_33()
    w = unit_weights(g)
    assert signed_sum(g, w, zero_profile(g)) == matching_sum(g, w)
    s = signed_sum(g, w, stembridge_profile(g))
    # oracle: Pfaffian of the 0/1 skew matrix of K33 by summing over pairings
    a = [[0] * 6 for _ in range(6)]
    for e in g.edges:
        a[e.u - 1][e.v - 1], a[e.v - 1][e.u - 1] = 1, -1
    assert s == pfaffian_by_pairings(a) == 4
    assert signed_sum(cycle_graph(5), unit_weights(cycle_graph(5)), zero_profile(cycle_graph(5))) == 0


def test_signed_sum_matches_direct_formula():
    g = complete_graph(6)
    w = symbolic_weights(g)
    p = stembridge_profile(g, [2, 5, 1, 6, 3, 4])
    direct = ZERO
    for m in enumerate_perfect_matchings(g):
        c = sum(p.count(a, b) for i, a in enumerate(m) for b in m[i + 1:])
        direct = direct + (-1) ** c * matching_weight(m, w)
    assert signed_sum(g, w, p) == direct


def test_pfaffian_examples():
    a = var(1)
    assert pfaffian_of_graph(_k2(), {1: a}) == a
    c4 = cycle_graph(4)
    assert pfaffian_of_graph(c4, unit_weights(c4)) == 2
    k4 = complete_graph(4)
    assert pfaffian_of_graph(k4, unit_weights(k4)) == 1
    with pytest.raises(NotSimpleGraph):
        pfaffian_of_graph(Graph.from_pairs(2, [(1, 2), (1, 2)]), {1: ONE, 2: ONE})


def test_skew_from_graph():
    a = var(1)
    m = skew_from_graph(_k2(), {1: a})
    assert m.rows == ((ZERO, a), (-a, ZERO))
    empty = Graph(3, [])
    assert all(x == 0 for r in skew_from_graph(empty, {}).rows for x in r)
    c4 = cycle_graph(4)
    m = skew_from_graph(c4, unit_weights(c4))
    assert (m[0, 1], m[1, 2], m[2, 3], m[0, 3]) == (1, 1, 1, 1)
    assert (m[0, 2], m[1, 3]) == (0, 0)


def test_skew_matrix_rejects_non_skew():
    with pytest.raises(ValueError):
        SkewMatrix([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        SkewMatrix([[1, 0], [0, 0]])


def _generic(n):
    upper = {(i, j): parse(f"x{10 * (i + 1) + j + 1}") for i in range(n) for j in range(i + 1, n)}
    return SkewMatrix.from_upper(n, upper)


def test_pfaffian_expand_examples():
    a = var(1)
    assert pfaffian_expand(SkewMatrix([[0, a], [-a, 0]])) == a
    # 4x4: brute-force signed sum over the 3 pairings
    expected = parse("x12*x34-x13*x24+x14*x23")
    assert pfaffian_expand(_generic(4)) == expected
    assert pfaffian_expand(_generic(3)) == ZERO
    assert pfaffian_expand(SkewMatrix([])) == ONE


def test_determinant_examples():
    a = var(1)
    assert determinant(SkewMatrix([[0, a], [-a, 0]])) == a * a
    assert determinant(SkewMatrix([[0] * 3 for _ in range(3)])) == ZERO
    assert determinant(_generic(4)) == parse("x12*x34-x13*x24+x14*x23") ** 2
    assert determinant([[1, 2], [3, 4]]) == -2


@pytest.mark.parametrize("seed", range(30))
def test_expand_and_det_against_leibniz(seed):
    rng = random.Random(seed)
    a = random_skew_matrix(rng, rng.randint(0, 6))
    ints = [[x.constant_value() for x in r] for r in a.rows]
    assert pfaffian_expand(a) == pfaffian_by_pairings(ints)
    assert determinant(a) == det_leibniz(ints)


@pytest.mark.parametrize("seed", range(60))
def test_pfaffian_oracle_equivalence(seed):
    rng = random.Random(seed)
    n = rng.choice([2, 3, 4, 5, 6, 7, 8])
    g = random_simple_graph(rng, n, rng.uniform(0.3, 0.9))
    w = random_int_weights(rng, g)
    order = random_order(rng, n)
    assert pfaffian_of_graph(g, w, order) == pfaffian_expand(skew_from_graph(g, w, order))


@pytest.mark.parametrize("g", [path_graph(6), cycle_graph(6), grid_graph(2, 4), complete_graph(6), wheel_graph(6)])
def test_pfaffian_symbolic(g):
    w = symbolic_weights(g)
    assert pfaffian_of_graph(g, w) == pfaffian_expand(skew_from_graph(g, w))


@pytest.mark.parametrize("seed", range(20))
def test_pf_squared_is_det(seed):
    rng = random.Random(seed)
    a = random_skew_matrix(rng, rng.randint(2, 10))
    pf = pfaffian_expand(a)
    assert pf * pf == determinant(a)


@pytest.mark.parametrize("seed", range(100))
def test_signed_sum_depends_only_on_disjoint_parity(seed):
    rng = random.Random(seed)
    g = random_simple_graph(rng, rng.choice([4, 6]), 0.6)
    w = symbolic_weights(g)
    p = random_profile(rng, g)
    base = signed_sum(g, w, p)
    cross = p.cross
    for a in g.edges:
        for b in g.edges:
            if a.id < b.id and g.adjacent(a.id, b.id) and rng.random() < 0.5:
                cross[(a.id, b.id)] = rng.randint(0, 4)
    if cross and rng.random() < 0.5:
        k = rng.choice(sorted(cross))
        cross[k] += 2
    noisy = CrossingProfile(cross, {e: rng.randint(0, 3) for e in g.edge_ids})
    assert signed_sum(g, w, noisy) == base


def test_odd_n_sums_vanish():
    g = complete_graph(5)
    w = symbolic_weights(g)
    assert matching_sum(g, w) == 0
    assert signed_sum(g, w, stembridge_profile(g)) == 0


def test_matching_sum_zero_profile_equal_signed():
    for g in [grid_graph(3, 4), wheel_graph(8), complete_bipartite_33()]:
        w = symbolic_weights(g)
        assert signed_sum(g, w, zero_profile(g)) == matching_sum(g, w)
