"""Find sign-modifications of edge weights that equalize two signed sums.

For two profiles A and B, a perfect matching M keeps its signed term iff
the flipped edges inside M offset its crossing-parity discrepancy::

    sum_{e in M} x_e = C(M, A) + C(M, B)   (mod 2)

One equation per perfect matching, one unknown per edge. Any solution
works for every weight assignment at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Mapping, Optional, Sequence

from . import kernels
from .embedding import CrossingProfile, stembridge_profile, zero_profile
from .engine import matching_signs, signed_sum
from .errors import NoSolution, VerificationFailed
from .graph import DEFAULT_MAX_MATCHINGS, Graph, Matching, enumerate_perfect_matchings
from .moves import SignModification
from .ring import Poly


@dataclass(frozen=True)
class GF2System:
    """Rows are int bitsets over edge positions (bit k = k-th edge by id)."""

    edge_ids: tuple
    matchings: tuple
    rows: tuple
    rhs: tuple

    @property
    def ncols(self) -> int:
        return len(self.edge_ids)

    def row_dict(self, k: int) -> dict:
        """Row k as ``{edge_id: 1}`` for the edges in the matching."""
        return {e: 1 for i, e in enumerate(self.edge_ids) if self.rows[k] >> i & 1}

    def rank(self) -> int:
        return kernels.gf2_solve(list(self.rows), [0] * len(self.rows), self.ncols)[1]

    def nullity(self) -> int:
        return self.ncols - self.rank()

    def satisfied_by(self, mod: SignModification) -> bool:
        x = sum(1 << i for i, e in enumerate(self.edge_ids) if e in mod.flipped)
        return all(bin(r & x).count("1") % 2 == b for r, b in zip(self.rows, self.rhs))


def build_system(
    g: Graph,
    pa: CrossingProfile,
    pb: CrossingProfile,
    *,
    max_matchings: int = DEFAULT_MAX_MATCHINGS,
) -> GF2System:
    matchings: List[Matching] = enumerate_perfect_matchings(g, max_matchings)
    sa = matching_signs(g, pa, matchings)
    sb = matching_signs(g, pb, matchings)
    col = {e.id: k for k, e in enumerate(g.edges)}
    rows = tuple(sum(1 << col[e] for e in m) for m in matchings)
    rhs = tuple(0 if a == b else 1 for a, b in zip(sa, sb))
    return GF2System(tuple(g.edge_ids), tuple(matchings), rows, rhs)


def solve_gf2(sys: GF2System) -> SignModification:
    """Canonical solution: pivots on the lowest edge id first, free edges unflipped."""
    x, _ = kernels.gf2_solve(list(sys.rows), list(sys.rhs), sys.ncols)
    if x is None:
        raise NoSolution("no sign-modification equalizes the two profiles")
    return SignModification.from_bits(x, sys.edge_ids)


def equalize(
    g: Graph,
    w: Mapping[int, Poly],
    pa: CrossingProfile,
    pb: CrossingProfile,
    *,
    max_matchings: int = DEFAULT_MAX_MATCHINGS,
) -> SignModification:
    """Return flips F with ``s(g, w, pa) == s(g, w with F negated, pb)``.

    The equality is recomputed exactly before returning.
    """
    g.require_simple()
    sys = build_system(g, pa, pb, max_matchings=max_matchings)
    mod = solve_gf2(sys)
    lhs = signed_sum(g, w, pa, max_matchings=max_matchings)
    rhs = signed_sum(g, mod.apply(w), pb, max_matchings=max_matchings)
    if lhs != rhs:
        raise VerificationFailed(f"signed sums differ after solving: {lhs} != {rhs}")
    return mod


def kasteleyn_weights(
    g: Graph,
    w: Mapping[int, Poly],
    order: Optional[Sequence[int]] = None,
    *,
    max_matchings: int = DEFAULT_MAX_MATCHINGS,
) -> SignModification:
    """Flips turning the half-circle Pfaffian into the plain matching sum.

    The caller vouches that ``g`` is planar. For a non-planar graph such
    as K_{3,3} this typically raises :class:`NoSolution`.
    """
    return equalize(
        g, w, zero_profile(g), stembridge_profile(g, order), max_matchings=max_matchings
    )
