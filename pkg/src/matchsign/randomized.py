"""Seeded random instances: graphs, profiles, valid moves, skew matrices."""

from __future__ import annotations

import random
from typing import Dict, List, Optional, Tuple

from .embedding import CrossingProfile
from .engine import SkewMatrix
from .graph import Graph
from .moves import (
    AdjacentCross,
    DoubleCross,
    Ledger,
    Move,
    SelfCross,
    VertexTransition,
    apply_move,
)
from .ring import Poly


def random_simple_graph(rng: random.Random, n: int, density: float = 0.5) -> Graph:
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < density]
    return Graph.from_pairs(n, pairs)


def random_matchable_graph(rng: random.Random, n: int, density: float = 0.4) -> Tuple[Graph, Tuple[int, ...]]:
    """Random simple graph on even ``n`` with a planted perfect matching.

    Returns the graph and the planted matching's edge ids.
    """
    verts = list(range(1, n + 1))
    rng.shuffle(verts)
    planted = {tuple(sorted(verts[k:k + 2])) for k in range(0, n, 2)}
    pairs = set(planted)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if rng.random() < density:
                pairs.add((i, j))
    ordered = sorted(pairs)
    g = Graph.from_pairs(n, ordered)
    ids = tuple(k for k, pr in enumerate(ordered, start=1) if pr in planted)
    return g, ids


def random_order(rng: random.Random, n: int) -> List[int]:
    order = list(range(1, n + 1))
    rng.shuffle(order)
    return order


def random_int_weights(rng: random.Random, g: Graph, lo: int = -5, hi: int = 5) -> Dict[int, Poly]:
    choices = [k for k in range(lo, hi + 1) if k]
    return {e.id: Poly.const(rng.choice(choices)) for e in g.edges}


def random_profile(rng: random.Random, g: Graph, max_count: int = 3, density: float = 0.3) -> CrossingProfile:
    ids = g.edge_ids
    cross = {}
    for a in range(len(ids)):
        for b in range(a + 1, len(ids)):
            if rng.random() < density:
                cross[(ids[a], ids[b])] = rng.randint(1, max_count)
    self_cross = {e: rng.randint(1, max_count) for e in ids if rng.random() < density / 2}
    return CrossingProfile(cross, self_cross)


def random_valid_move(rng: random.Random, g: Graph, p: CrossingProfile) -> Optional[Move]:
    """A move that applies cleanly to ``p``, or None if ``g`` has no edges."""
    edges = g.edges
    if not edges:
        return None
    kinds = ["self", "transition"]
    adjacent = [
        (a.id, b.id)
        for i, a in enumerate(edges)
        for b in edges[i + 1:]
        if len(set(a.ends) & set(b.ends)) == 1
    ]
    if adjacent:
        kinds.append("adjacent")
    if len(edges) > 1:
        kinds.append("double")
    transitions = [(e.id, v) for e in edges for v in range(1, g.n + 1) if v not in e.ends]
    if not transitions:
        kinds.remove("transition")
    kind = rng.choice(kinds)

    if kind == "adjacent":
        e1, e2 = rng.choice(adjacent)
        d = -1 if p.count(e1, e2) > 0 and rng.random() < 0.5 else 1
        return AdjacentCross(e1, e2, d)
    if kind == "self":
        e = rng.choice(edges).id
        d = -1 if p.self_count(e) > 0 and rng.random() < 0.5 else 1
        return SelfCross(e, d)
    if kind == "double":
        a, b = rng.sample(edges, 2)
        d = -2 if p.count(a.id, b.id) >= 2 and rng.random() < 0.5 else 2
        return DoubleCross(a.id, b.id, d)
    e, v = rng.choice(transitions)
    deltas = {}
    for f in g.incident(v):
        deltas[f] = -1 if p.count(e, f) > 0 and rng.random() < 0.5 else 1
    return VertexTransition(e, v, deltas)


def random_script(rng: random.Random, g: Graph, p: CrossingProfile, length: int) -> List[Move]:
    script = []
    led = Ledger()
    for _ in range(length):
        mv = random_valid_move(rng, g, p)
        if mv is None:
            break
        p, led = apply_move(g, p, led, mv)
        script.append(mv)
    return script


def random_skew_matrix(rng: random.Random, n: int, lo: int = -5, hi: int = 5) -> SkewMatrix:
    upper = {(i, j): rng.randint(lo, hi) for i in range(n) for j in range(i + 1, n)}
    return SkewMatrix.from_upper(n, upper)

