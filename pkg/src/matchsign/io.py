"""JSON file formats for graphs, profiles, move scripts and sign-modifications."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Dict, List, Tuple, Union

from .embedding import CrossingProfile
from .graph import Edge, Graph, check_weights
from .moves import Move, move_to_json, script_from_json
from .ring import Poly, parse, var

PathLike = Union[str, Path]


class FormatError(ValueError):
    """A JSON document does not follow the expected schema."""


def graph_from_json(obj) -> Tuple[Graph, Dict[int, Poly]]:
    try:
        n = obj["n"]
        raw = obj["edges"]
        edges = [Edge(int(x["id"]), int(x["u"]), int(x["v"])) for x in raw]
        if not isinstance(n, int):
            raise FormatError("'n' must be an integer")
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed graph document: {exc}") from exc
    g = Graph(n, edges)
    weights = {}
    for x in raw:
        eid = int(x["id"])
        weights[eid] = parse(str(x["weight"])) if "weight" in x else var(eid)
    check_weights(g, weights)
    return g, weights


def graph_to_json(g: Graph, weights: Dict[int, Poly] | None = None) -> dict:
    edges = []
    for e in g.edges:
        item = {"id": e.id, "u": e.u, "v": e.v}
        if weights is not None:
            item["weight"] = str(weights[e.id])
        edges.append(item)
    return {"n": g.n, "edges": edges}


def profile_from_json(obj) -> CrossingProfile:
    try:
        cross = {}
        for x in obj.get("cross", []):
            key = (int(x["e1"]), int(x["e2"]))
            if key[0] == key[1]:
                raise FormatError(f"cross entry pairs edge {key[0]} with itself")
            key = tuple(sorted(key))
            cross[key] = cross.get(key, 0) + int(x["count"])
        self_cross = {}
        for x in obj.get("self_cross", []):
            e = int(x["e"])
            self_cross[e] = self_cross.get(e, 0) + int(x["count"])
    except (KeyError, TypeError, AttributeError) as exc:
        raise FormatError(f"malformed profile document: {exc}") from exc
    return CrossingProfile(cross, self_cross)


def profile_to_json(p: CrossingProfile) -> dict:
    return {
        "cross": [{"e1": a, "e2": b, "count": k} for (a, b), k in sorted(p.cross.items())],
        "self_cross": [{"e": e, "count": k} for e, k in sorted(p.self_cross.items())],
    }


def script_to_json(script: List[Move]) -> list:
    return [move_to_json(m) for m in script]


def _load(path: PathLike):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def load_graph(path: PathLike) -> Tuple[Graph, Dict[int, Poly]]:
    return graph_from_json(_load(path))


def load_profile(path: PathLike) -> CrossingProfile:
    return profile_from_json(_load(path))


def load_script(path: PathLike) -> List[Move]:
    obj = _load(path)
    if not isinstance(obj, list):
        raise FormatError("move script must be a JSON list")
    return script_from_json(obj)


def dump(obj, path: PathLike) -> None:
    Path(path).write_text(json.dumps(obj, indent=2) + "\n", encoding="utf-8")
