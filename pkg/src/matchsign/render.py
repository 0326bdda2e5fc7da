"""SVG drawing of the half-circle embedding."""

from __future__ import annotations

import math
from typing import List, Optional, Sequence, Tuple

from .embedding import interleave, positions
from .graph import Graph

SCALE = 60.0
MARGIN = 30.0
VERTEX_RADIUS = 5.0
MARKER_RADIUS = 4.0


def arc_intersection(i: int, j: int, k: int, l: int) -> Tuple[float, float]:
    """Crossing point of the upper half-circles over [i, j] and [k, l]."""
    c1, r1 = (i + j) / 2, (j - i) / 2
    c2, r2 = (k + l) / 2, (l - k) / 2
    x = (r1 * r1 - r2 * r2 + c2 * c2 - c1 * c1) / (2 * (c2 - c1))
    y = math.sqrt(max(r1 * r1 - (x - c1) ** 2, 0.0))
    return x, y


def crossing_points(g: Graph, order: Optional[Sequence[int]] = None) -> List[Tuple[int, int, float, float]]:
    """``(e1, e2, x, y)`` for every crossing pair, in plane coordinates."""
    g.require_simple()
    pos = positions(g, order)
    spans = [(e.id,) + tuple(sorted((pos[e.u], pos[e.v]))) for e in g.edges]
    out = []
    for a in range(len(spans)):
        ea, i, j = spans[a]
        for b in range(a + 1, len(spans)):
            eb, k, l = spans[b]
            if interleave(i, j, k, l):
                out.append((ea, eb) + arc_intersection(i, j, k, l))
    return out


def _f(x: float) -> str:
    return f"{x:.3f}"


def render_svg(g: Graph, order: Optional[Sequence[int]] = None) -> str:
    pos = positions(g, order)
    crossings = crossing_points(g, order)
    max_r = max([abs(pos[e.u] - pos[e.v]) / 2 for e in g.edges], default=0.0)
    width = (g.n + 1) * SCALE
    height = max_r * SCALE + 2 * MARGIN
    base = height - MARGIN

    def sx(x: float) -> float:
        return x * SCALE

    def sy(y: float) -> float:
        return base - y * SCALE

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(width)}" height="{_f(height)}" '
        f'viewBox="0 0 {_f(width)} {_f(height)}">',
        '<g fill="none" stroke="gray" stroke-width="2">',
    ]
    for e in g.edges:
        i, j = sorted((pos[e.u], pos[e.v]))
        r = (j - i) / 2 * SCALE
        lines.append(
            f'<path id="e{e.id}" d="M {_f(sx(i))} {_f(base)} A {_f(r)} {_f(r)} 0 0 1 {_f(sx(j))} {_f(base)}"/>'
        )
    lines.append("</g>")
    lines.append('<g fill="black" stroke="black">')
    for v, k in sorted(pos.items(), key=lambda kv: kv[1]):
        lines.append(f'<circle id="v{v}" cx="{_f(sx(k))}" cy="{_f(base)}" r="{_f(VERTEX_RADIUS)}"/>')
    lines.append("</g>")
    lines.append('<g fill="white" stroke="black" stroke-width="1">')
    for ea, eb, x, y in crossings:
        lines.append(
            f'<circle class="crossing" data-edges="{ea},{eb}" cx="{_f(sx(x))}" cy="{_f(sy(y))}" r="{_f(MARKER_RADIUS)}"/>'
        )
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
