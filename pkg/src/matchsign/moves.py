"""Local modifications of a drawing, acting on crossing profiles.

Each move changes some crossing counts. Only the vertex transition changes
the sign of any perfect matching (exactly those containing the dragged
edge), so it records one weight flip for that edge in the ledger.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from .embedding import CrossingProfile, pair
from .errors import (
    BadDelta,
    EndpointVertex,
    IncompleteDeltas,
    MoveError,
    NegativeCount,
    NotAdjacent,
    ScriptError,
)
from .graph import Graph
from .ring import Poly


@dataclass(frozen=True)
class AdjacentCross:
    """Add or remove one crossing between two edges sharing a vertex."""

    e1: int
    e2: int
    delta: int


@dataclass(frozen=True)
class SelfCross:
    e: int
    delta: int


@dataclass(frozen=True)
class DoubleCross:
    """Drag one edge segment over another, adding or removing two crossings."""

    e1: int
    e2: int
    delta: int


@dataclass(frozen=True)
class VertexTransition:
    """Drag edge ``e`` over vertex ``v``.

    ``deltas`` maps every other edge incident to ``v`` to +1 or -1.
    """

    e: int
    v: int
    deltas: Tuple[Tuple[int, int], ...]

    def __init__(self, e: int, v: int, deltas: Union[Mapping[int, int], Iterable[Tuple[int, int]]]):
        items = deltas.items() if isinstance(deltas, Mapping) else deltas
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "deltas", tuple(sorted(items)))

    @property
    def delta_map(self) -> Dict[int, int]:
        return dict(self.deltas)


Move = Union[AdjacentCross, SelfCross, DoubleCross, VertexTransition]


@dataclass(frozen=True)
class Ledger:
    """Per-edge count of weight negations accumulated by vertex transitions."""

    flips: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def of(cls, flips: Mapping[int, int]) -> "Ledger":
        return cls(tuple(sorted((e, k) for e, k in flips.items() if k)))

    def count(self, e: int) -> int:
        return dict(self.flips).get(e, 0)

    def bump(self, e: int) -> "Ledger":
        d = dict(self.flips)
        d[e] = d.get(e, 0) + 1
        return Ledger.of(d)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.flips)


@dataclass(frozen=True)
class SignModification:
    """Edges whose weight is negated; every other edge keeps its sign."""

    flipped: frozenset = field(default_factory=frozenset)

    @classmethod
    def from_bits(cls, x: int, edge_ids: Sequence[int]) -> "SignModification":
        return cls(frozenset(e for k, e in enumerate(edge_ids) if x >> k & 1))

    def sign(self, e: int) -> int:
        return -1 if e in self.flipped else 1

    def apply(self, w: Mapping[int, Poly]) -> Dict[int, Poly]:
        return {e: (-x if e in self.flipped else x) for e, x in w.items()}

    def compose(self, other: "SignModification") -> "SignModification":
        return SignModification(self.flipped ^ other.flipped)

    def to_json(self) -> dict:
        return {"flips": sorted(self.flipped)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "SignModification":
        return cls(frozenset(int(e) for e in obj.get("flips", [])))


def ledger_to_modification(led: Ledger) -> SignModification:
    return SignModification(frozenset(e for e, k in led.flips if k % 2))


def _require_edges(g: Graph, *ids: int) -> None:
    for e in ids:
        g.edge(e)


def apply_move(
    g: Graph, p: CrossingProfile, led: Ledger, mv: Move
) -> Tuple[CrossingProfile, Ledger]:
    if isinstance(mv, AdjacentCross):
        _require_edges(g, mv.e1, mv.e2)
        if mv.delta not in (1, -1):
            raise BadDelta(f"adjacent crossing delta must be +-1, got {mv.delta}")
        a, b = g.edge(mv.e1), g.edge(mv.e2)
        if mv.e1 == mv.e2 or len(set(a.ends) & set(b.ends)) != 1:
            raise NotAdjacent(f"edges {mv.e1} and {mv.e2} do not share exactly one vertex")
        _guard(p.count(mv.e1, mv.e2), mv.delta, (mv.e1, mv.e2))
        return p.with_counts({pair(mv.e1, mv.e2): mv.delta}), led

    if isinstance(mv, SelfCross):
        _require_edges(g, mv.e)
        if mv.delta not in (1, -1):
            raise BadDelta(f"self crossing delta must be +-1, got {mv.delta}")
        _guard(p.self_count(mv.e), mv.delta, mv.e)
        return p.with_counts(self_delta={mv.e: mv.delta}), led

    if isinstance(mv, DoubleCross):
        _require_edges(g, mv.e1, mv.e2)
        if mv.delta not in (2, -2):
            raise BadDelta(f"double crossing delta must be +-2, got {mv.delta}")
        if mv.e1 == mv.e2:
            raise MoveError("double crossing needs two distinct edges")
        _guard(p.count(mv.e1, mv.e2), mv.delta, (mv.e1, mv.e2))
        return p.with_counts({pair(mv.e1, mv.e2): mv.delta}), led

    if isinstance(mv, VertexTransition):
        _require_edges(g, mv.e)
        if mv.v in g.edge(mv.e).ends:
            raise EndpointVertex(f"vertex {mv.v} is an endpoint of edge {mv.e}")
        if not 1 <= mv.v <= g.n:
            raise MoveError(f"no vertex {mv.v}")
        deltas = mv.delta_map
        if len(deltas) != len(mv.deltas):
            raise IncompleteDeltas("repeated edge in deltas")
        expected = set(g.incident(mv.v))
        if set(deltas) != expected:
            raise IncompleteDeltas(
                f"deltas must cover exactly edges {sorted(expected)} at vertex {mv.v}, got {sorted(deltas)}"
            )
        for f, d in deltas.items():
            if d not in (1, -1):
                raise BadDelta(f"vertex transition delta must be +-1, got {d} for edge {f}")
            _guard(p.count(mv.e, f), d, (mv.e, f))
        new_p = p.with_counts({pair(mv.e, f): d for f, d in deltas.items()})
        return new_p, led.bump(mv.e)

    raise TypeError(f"not a move: {mv!r}")


def _guard(current: int, delta: int, where) -> None:
    if current + delta < 0:
        raise NegativeCount(f"count at {where} is {current}; cannot apply {delta:+d}")


def apply_script(
    g: Graph, p: CrossingProfile, script: Sequence[Move]
) -> Tuple[CrossingProfile, Ledger]:
    led = Ledger()
    for i, mv in enumerate(script):
        try:
            p, led = apply_move(g, p, led, mv)
        except MoveError as exc:
            raise ScriptError(i, exc) from exc
        except KeyError as exc:
            # unknown edge ids surface as KeyError subclasses
            raise ScriptError(i, MoveError(str(exc))) from exc
    return p, led


# JSON form of moves

def move_to_json(mv: Move) -> dict:
    if isinstance(mv, AdjacentCross):
        return {"type": "adjacent_cross", "e1": mv.e1, "e2": mv.e2, "delta": mv.delta}
    if isinstance(mv, SelfCross):
        return {"type": "self_cross", "e": mv.e, "delta": mv.delta}
    if isinstance(mv, DoubleCross):
        return {"type": "double_cross", "e1": mv.e1, "e2": mv.e2, "delta": mv.delta}
    if isinstance(mv, VertexTransition):
        return {
            "type": "vertex_transition",
            "e": mv.e,
            "v": mv.v,
            "deltas": [{"f": f, "d": d} for f, d in mv.deltas],
        }
    raise TypeError(f"not a move: {mv!r}")


def move_from_json(obj: Mapping) -> Move:
    kind = obj.get("type")
    try:
        if kind == "adjacent_cross":
            return AdjacentCross(int(obj["e1"]), int(obj["e2"]), int(obj["delta"]))
        if kind == "self_cross":
            return SelfCross(int(obj["e"]), int(obj["delta"]))
        if kind == "double_cross":
            return DoubleCross(int(obj["e1"]), int(obj["e2"]), int(obj["delta"]))
        if kind == "vertex_transition":
            return VertexTransition(
                int(obj["e"]), int(obj["v"]), [(int(x["f"]), int(x["d"])) for x in obj["deltas"]]
            )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed {kind} move: {obj!r}") from exc
    raise ValueError(f"unknown move type {kind!r}")


def script_from_json(items: Sequence[Mapping]) -> List[Move]:
    return [move_from_json(x) for x in items]
