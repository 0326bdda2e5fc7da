"""Loopless multigraphs with edge weights, and perfect-matching enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Tuple

from . import kernels
from .errors import (
    BadVertexLabel,
    DuplicateEdgeId,
    EdgeIdGap,
    LoopEdge,
    NotSimpleGraph,
    TooManyMatchings,
    UnknownEdgeId,
    WeightError,
)
from .ring import ONE, Poly, var

Matching = Tuple[int, ...]
WeightAssignment = Dict[int, Poly]

DEFAULT_MAX_MATCHINGS = 10**6


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int

    @property
    def ends(self) -> Tuple[int, int]:
        return (self.u, self.v)

    def other(self, w: int) -> int:
        return self.v if w == self.u else self.u


class Graph:
    """A graph on vertices ``1..n`` with an id-indexed multiset of edges.

    Edges are normalized so that ``u < v`` and kept sorted by id. Construction
    validates all invariants unless ``check=False``.
    """

    __slots__ = ("n", "edges", "_by_id", "_incident")

    def __init__(self, n: int, edges: Iterable[Edge], *, check: bool = True):
        self.n = n
        norm = [Edge(e.id, min(e.u, e.v), max(e.u, e.v)) for e in edges]
        self.edges: Tuple[Edge, ...] = tuple(sorted(norm, key=lambda e: e.id))
        self._by_id = {e.id: e for e in self.edges}
        self._incident = None
        if check:
            validate_graph(self)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Tuple[int, int]]) -> "Graph":
        """Build a graph whose i-th pair becomes edge id i (1-based)."""
        return cls(n, [Edge(i, u, v) for i, (u, v) in enumerate(pairs, start=1)])

    def __repr__(self) -> str:
        pairs = ", ".join(f"{e.id}:{e.u}-{e.v}" for e in self.edges)
        return f"Graph(n={self.n}, edges=[{pairs}])"

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    @property
    def edge_ids(self) -> List[int]:
        return [e.id for e in self.edges]

    def edge(self, eid: int) -> Edge:
        try:
            return self._by_id[eid]
        except KeyError:
            raise UnknownEdgeId(eid) from None

    def has_edge(self, eid: int) -> bool:
        return eid in self._by_id

    def incident(self, v: int) -> List[int]:
        """Edge ids incident to vertex ``v``, ascending."""
        if self._incident is None:
            inc: Dict[int, List[int]] = {w: [] for w in range(1, self.n + 1)}
            for e in self.edges:
                inc[e.u].append(e.id)
                inc[e.v].append(e.id)
            self._incident = inc
        return list(self._incident.get(v, ()))

    def find_edge(self, u: int, v: int) -> int:
        """Id of the (first) edge joining ``u`` and ``v``."""
        a, b = min(u, v), max(u, v)
        for e in self.edges:
            if e.u == a and e.v == b:
                return e.id
        raise UnknownEdgeId((u, v))

    def is_simple(self) -> bool:
        return len({e.ends for e in self.edges}) == len(self.edges)

    def require_simple(self) -> None:
        if not self.is_simple():
            raise NotSimpleGraph("graph has parallel edges")

    def adjacent(self, e1: int, e2: int) -> bool:
        """Whether two edges share at least one endpoint."""
        a, b = self.edge(e1), self.edge(e2)
        return bool(set(a.ends) & set(b.ends))


def validate_graph(g: Graph) -> None:
    """Raise a :class:`GraphError` subclass if ``g`` breaks an invariant."""
    if not isinstance(g.n, int) or g.n < 0:
        raise BadVertexLabel(f"vertex count must be a nonnegative int, got {g.n!r}")
    seen = set()
    for e in g.edges:
        if e.id in seen:
            raise DuplicateEdgeId(e.id)
        seen.add(e.id)
        if e.u == e.v:
            raise LoopEdge(f"edge {e.id} joins vertex {e.u} to itself")
        for w in e.ends:
            if not 1 <= w <= g.n:
                raise BadVertexLabel(f"edge {e.id} uses vertex {w} outside 1..{g.n}")
    if seen != set(range(1, len(g.edges) + 1)):
        raise EdgeIdGap(f"edge ids must be 1..{len(g.edges)}, got {sorted(seen)}")


def is_perfect_matching(g: Graph, s: Iterable[int]) -> bool:
    ids = list(s)
    covered = set()
    for eid in ids:
        e = g.edge(eid)
        if e.u in covered or e.v in covered:
            return False
        covered.update(e.ends)
    return len(covered) == g.n


def enumerate_perfect_matchings(
    g: Graph, max_matchings: int = DEFAULT_MAX_MATCHINGS
) -> List[Matching]:
    """All perfect matchings as ascending edge-id tuples, lexicographically sorted.

    Raises :class:`TooManyMatchings` past ``max_matchings``.
    """
    us = [e.u for e in g.edges]
    vs = [e.v for e in g.edges]
    raw = kernels.enumerate_matchings(g.n, us, vs, max_matchings)
    if len(raw) > max_matchings:
        raise TooManyMatchings(f"more than {max_matchings} perfect matchings")
    ids = [e.id for e in g.edges]
    return sorted(tuple(ids[i] for i in m) for m in raw)


def unit_weights(g: Graph) -> WeightAssignment:
    return {e.id: ONE for e in g.edges}


def symbolic_weights(g: Graph) -> WeightAssignment:
    return {e.id: var(e.id) for e in g.edges}


def check_weights(g: Graph, w: Mapping[int, Poly]) -> None:
    for e in g.edges:
        if e.id not in w:
            raise WeightError(f"no weight for edge {e.id}")
        if w[e.id].is_zero():
            raise WeightError(f"weight of edge {e.id} is zero")
    extra = set(w) - set(g.edge_ids)
    if extra:
        raise UnknownEdgeId(f"weights given for unknown edges {sorted(extra)}")


# Small graph families used by tests, the CLI verifier, and the docs.

def path_graph(n: int) -> Graph:
    return Graph.from_pairs(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_pairs(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_pairs(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def complete_bipartite_33() -> Graph:
    """K_{3,3} with parts {1,3,5} and {2,4,6}."""
    return Graph.from_pairs(6, sorted((min(i, j), max(i, j)) for i in (1, 3, 5) for j in (2, 4, 6)))


def grid_graph(rows: int, cols: int) -> Graph:
    """Grid with vertices numbered row-major from 1."""
    idx = lambda r, c: r * cols + c + 1  # noqa: E731
    pairs = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                pairs.append((idx(r, c), idx(r, c + 1)))
            if r + 1 < rows:
                pairs.append((idx(r, c), idx(r + 1, c)))
    return Graph.from_pairs(rows * cols, pairs)


def wheel_graph(n: int) -> Graph:
    """Hub vertex 1 joined to a rim cycle on 2..n."""
    rim = list(range(2, n + 1))
    pairs = [(1, v) for v in rim]
    pairs += [(rim[i], rim[i + 1]) for i in range(len(rim) - 1)] + [(rim[0], rim[-1])]
    return Graph.from_pairs(n, pairs)

