"""Worked example: untangling the hexagonal drawing of K_{3,3}.

Vertices 1..6 sit around a hexagon (equivalently, on a line with
half-circle edges). The three long diagonals 1-4, 2-5, 3-6 cross pairwise.
Diagonal 3-6 is dragged across vertices 4 and 5 to the outside, then 2-5
across vertices 3 and 4. Each drag is followed by straightening out the
single crossings with neighbouring edges and the double crossing it left
behind. One crossing remains, between 2-5 and 3-6. Both dragged edges are
negated twice, so the net weights are unchanged.
"""

from __future__ import annotations

from typing import List

from .graph import Graph, complete_bipartite_33
from .moves import AdjacentCross, DoubleCross, Move, VertexTransition


def k33() -> Graph:
    return complete_bipartite_33()


def k33_untangle_script(g: Graph | None = None) -> List[Move]:
    g = g or k33()
    e = g.find_edge
    e14, e25, e36 = e(1, 4), e(2, 5), e(3, 6)
    return [
        # 3-6 over vertex 4: leaves 1-4, meets 3-4 and 4-5
        VertexTransition(e36, 4, {e14: -1, e(3, 4): +1, e(4, 5): +1}),
        # 3-6 over vertex 5: leaves 2-5, meets 4-5 again and 5-6
        VertexTransition(e36, 5, {e25: -1, e(4, 5): +1, e(5, 6): +1}),
        AdjacentCross(e36, e(5, 6), -1),
        AdjacentCross(e36, e(3, 4), -1),
        DoubleCross(e36, e(4, 5), -2),
        # 2-5 over vertices 3 and 4, same pattern
        VertexTransition(e25, 3, {e(2, 3): +1, e(3, 4): +1, e36: +1}),
        VertexTransition(e25, 4, {e14: -1, e(3, 4): +1, e(4, 5): +1}),
        AdjacentCross(e25, e(2, 3), -1),
        AdjacentCross(e25, e(4, 5), -1),
        DoubleCross(e25, e(3, 4), -2),
    ]
