"""Crossing profiles: the combinatorial stand-in for a plane drawing.

A profile records, for every unordered pair of distinct edges, how many
times their curves cross away from vertex points, plus a self-crossing
count per edge. A point where k curves meet is stored as its k*(k-1)/2
pairwise crossings, so untangling such a point leaves the profile as is.
Whether a profile is realizable by an actual drawing is not checked.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from .errors import BadVertexLabel, ProfileError, UnknownEdgeId
from .graph import Graph

Pair = Tuple[int, int]


def pair(e1: int, e2: int) -> Pair:
    if e1 == e2:
        raise ProfileError(f"pair of identical edges {e1}; use self_cross")
    return (e1, e2) if e1 < e2 else (e2, e1)


class CrossingProfile:
    """Immutable crossing counts. Absent keys mean zero."""

    __slots__ = ("_cross", "_self")

    def __init__(
        self,
        cross: Optional[Mapping[Pair, int]] = None,
        self_cross: Optional[Mapping[int, int]] = None,
    ):
        c: Dict[Pair, int] = {}
        for (a, b), k in (cross or {}).items():
            _check_count(k)
            key = pair(a, b)
            c[key] = c.get(key, 0) + k
        s: Dict[int, int] = {}
        for e, k in (self_cross or {}).items():
            _check_count(k)
            s[e] = s.get(e, 0) + k
        self._cross = {p: k for p, k in c.items() if k}
        self._self = {e: k for e, k in s.items() if k}

    @property
    def cross(self) -> Dict[Pair, int]:
        return dict(self._cross)

    @property
    def self_cross(self) -> Dict[int, int]:
        return dict(self._self)

    def count(self, e1: int, e2: int) -> int:
        return self._cross.get(pair(e1, e2), 0)

    def self_count(self, e: int) -> int:
        return self._self.get(e, 0)

    def total(self) -> int:
        return sum(self._cross.values())

    def edges_mentioned(self) -> set:
        out = set(self._self)
        for a, b in self._cross:
            out.update((a, b))
        return out

    def with_counts(
        self,
        cross_delta: Optional[Mapping[Pair, int]] = None,
        self_delta: Optional[Mapping[int, int]] = None,
    ) -> "CrossingProfile":
        """New profile with deltas added; caller ensures nonnegativity."""
        c = dict(self._cross)
        for p, d in (cross_delta or {}).items():
            key = pair(*p)
            c[key] = c.get(key, 0) + d
        s = dict(self._self)
        for e, d in (self_delta or {}).items():
            s[e] = s.get(e, 0) + d
        return CrossingProfile(c, s)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CrossingProfile):
            return NotImplemented
        return self._cross == other._cross and self._self == other._self

    def __hash__(self) -> int:
        return hash((frozenset(self._cross.items()), frozenset(self._self.items())))

    def __repr__(self) -> str:
        return f"CrossingProfile(cross={dict(sorted(self._cross.items()))}, self_cross={dict(sorted(self._self.items()))})"


def _check_count(k) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise ProfileError(f"crossing counts must be nonnegative ints, got {k!r}")


def check_profile(p: CrossingProfile, g: Graph) -> None:
    """Raise :class:`UnknownEdgeId` if ``p`` mentions an edge not in ``g``."""
    unknown = sorted(e for e in p.edges_mentioned() if not g.has_edge(e))
    if unknown:
        raise UnknownEdgeId(f"profile mentions unknown edges {unknown}")


def zero_profile(g: Graph) -> CrossingProfile:
    """The profile of a drawing without crossings."""
    return CrossingProfile()


def identity_order(g: Graph) -> Tuple[int, ...]:
    return tuple(range(1, g.n + 1))


def positions(g: Graph, order: Optional[Sequence[int]]) -> Dict[int, int]:
    """Map vertex -> 1-based position; ``order[k-1]`` sits at point (k, 0)."""
    if order is None:
        order = identity_order(g)
    order = list(order)
    if sorted(order) != list(range(1, g.n + 1)):
        raise BadVertexLabel(f"vertex order must be a permutation of 1..{g.n}, got {order}")
    return {v: k for k, v in enumerate(order, start=1)}


def interleave(i: int, j: int, k: int, l: int) -> bool:
    """Whether intervals (i, j) and (k, l), each with lower end first, strictly interleave."""
    return i < k < j < l or k < i < l < j


def stembridge_profile(g: Graph, order: Optional[Sequence[int]] = None) -> CrossingProfile:
    """Crossings of the half-circle drawing with vertices placed along a line.

    Two arcs cross (exactly once) iff their position intervals strictly
    interleave; arcs sharing an endpoint never cross.
    """
    g.require_simple()
    pos = positions(g, order)
    spans = [(e.id,) + tuple(sorted((pos[e.u], pos[e.v]))) for e in g.edges]
    cross = {}
    for a in range(len(spans)):
        ea, i, j = spans[a]
        for b in range(a + 1, len(spans)):
            eb, k, l = spans[b]
            if interleave(i, j, k, l):
                cross[(ea, eb)] = 1
    return CrossingProfile(cross)


def disjoint_pairs(g: Graph) -> Iterable[Pair]:
    es = g.edges
    for a in range(len(es)):
        for b in range(a + 1, len(es)):
            if not set(es[a].ends) & set(es[b].ends):
                yield (es[a].id, es[b].id)


def disjoint_parity(p: CrossingProfile, g: Graph) -> Dict[Pair, int]:
    """Crossing parity on every vertex-disjoint edge pair (adjacent pairs omitted)."""
    return {q: p.count(*q) & 1 for q in disjoint_pairs(g)}


def parity_table(p: CrossingProfile, g: Graph) -> bytes:
    """Dense |E|x|E| crossing-parity table indexed by edge position, for the kernels."""
    m = len(g.edges)
    index = {e.id: i for i, e in enumerate(g.edges)}
    table = bytearray(m * m)
    for (a, b), k in p.cross.items():
        if k & 1 and a in index and b in index:
            i, j = index[a], index[b]
            table[i * m + j] = 1
            table[j * m + i] = 1
    return bytes(table)
