"""Crossing numbers, matching signs, (signed) matching sums and Pfaffians.

The Pfaffian of a weighted graph is the signed matching sum taken in the
half-circle drawing. :func:`skew_from_graph` and :func:`pfaffian_expand`
give an independent matrix route used as a cross-check.
"""

from __future__ import annotations

from typing import Dict, List, Mapping, Optional, Sequence

from . import kernels
from .embedding import CrossingProfile, parity_table, positions, stembridge_profile
from .graph import (
    DEFAULT_MAX_MATCHINGS,
    Graph,
    Matching,
    enumerate_perfect_matchings,
)
from .ring import ONE, ZERO, Poly


def crossing_number(m: Sequence[int], p: CrossingProfile) -> int:
    """Total crossings between distinct edges of ``m``; self-crossings are ignored."""
    ids = list(m)
    total = 0
    for a in range(len(ids)):
        for b in range(a + 1, len(ids)):
            total += p.count(ids[a], ids[b])
    return total


def matching_sign(m: Sequence[int], p: CrossingProfile) -> int:
    return sign_of_crossings(crossing_number(m, p))


def sign_of_crossings(c: int) -> int:
    return -1 if c & 1 else 1


def matching_weight(m: Sequence[int], w: Mapping[int, Poly]) -> Poly:
    out = ONE
    for e in m:
        out = out * w[e]
    return out


def matching_sum(
    g: Graph, w: Mapping[int, Poly], *, max_matchings: int = DEFAULT_MAX_MATCHINGS
) -> Poly:
    total = ZERO
    for m in enumerate_perfect_matchings(g, max_matchings):
        total = total + matching_weight(m, w)
    return total


def matching_signs(
    g: Graph,
    p: CrossingProfile,
    matchings: Optional[List[Matching]] = None,
    *,
    max_matchings: int = DEFAULT_MAX_MATCHINGS,
) -> List[int]:
    """Sign of every perfect matching under ``p``, in enumeration order."""
    if matchings is None:
        matchings = enumerate_perfect_matchings(g, max_matchings)
    index = {e.id: i for i, e in enumerate(g.edges)}
    rows = [[index[e] for e in m] for m in matchings]
    parities = kernels.matching_parities(rows, len(g.edges), parity_table(p, g))
    return [-1 if bit else 1 for bit in parities]


def signed_sum(
    g: Graph,
    w: Mapping[int, Poly],
    p: CrossingProfile,
    *,
    max_matchings: int = DEFAULT_MAX_MATCHINGS,
) -> Poly:
    matchings = enumerate_perfect_matchings(g, max_matchings)
    total = ZERO
    for m, s in zip(matchings, matching_signs(g, p, matchings)):
        term = matching_weight(m, w)
        total = total + term if s > 0 else total - term
    return total


def pfaffian_of_graph(
    g: Graph, w: Mapping[int, Poly], order: Optional[Sequence[int]] = None
) -> Poly:
    """Signed matching sum in the half-circle drawing for vertex ``order``."""
    return signed_sum(g, w, stembridge_profile(g, order))


class SkewMatrix:
    """Square matrix over ``Poly`` with ``a[i][j] == -a[j][i]`` and zero diagonal.

    Indices are 0-based internally.
    """

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence]):
        n = len(rows)
        data = tuple(tuple(Poly.coerce(x) for x in r) for r in rows)
        for i, r in enumerate(data):
            if len(r) != n:
                raise ValueError("matrix is not square")
            if r[i]:
                raise ValueError(f"nonzero diagonal entry at {i}")
            for j in range(i + 1, n):
                if r[j] != -data[j][i]:
                    raise ValueError(f"not skew-symmetric at ({i}, {j})")
        self.n = n
        self.rows = data

    @classmethod
    def from_upper(cls, n: int, upper: Mapping) -> "SkewMatrix":
        """Build from ``{(i, j): value}`` with 0-based ``i < j``."""
        rows = [[ZERO] * n for _ in range(n)]
        for (i, j), x in upper.items():
            x = Poly.coerce(x)
            rows[i][j] = rows[i][j] + x
            rows[j][i] = rows[j][i] - x
        return cls(rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewMatrix) and self.rows == other.rows

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"SkewMatrix([{body}])"


def skew_from_graph(
    g: Graph, w: Mapping[int, Poly], order: Optional[Sequence[int]] = None
) -> SkewMatrix:
    """Weighted skew adjacency matrix with rows indexed by vertex position."""
    g.require_simple()
    pos = positions(g, order)
    upper = {}
    for e in g.edges:
        i, j = sorted((pos[e.u] - 1, pos[e.v] - 1))
        upper[(i, j)] = upper.get((i, j), ZERO) + w[e.id]
    return SkewMatrix.from_upper(g.n, upper)


def pfaffian_expand(a: SkewMatrix) -> Poly:
    """Pfaffian by expansion along the first remaining row.

    Odd dimension gives 0; the empty matrix gives 1.
    """
    n = a.n
    if n % 2:
        return ZERO
    memo: Dict[int, Poly] = {0: ONE}

    def pf(mask: int) -> Poly:
        if mask in memo:
            return memo[mask]
        idx = [k for k in range(n) if mask >> k & 1]
        first = idx[0]
        total = ZERO
        for pos, j in enumerate(idx[1:]):
            entry = a.rows[first][j]
            if not entry:
                continue
            term = entry * pf(mask & ~(1 << first) & ~(1 << j))
            # j sits at 0-based position pos+1 among the remaining indices
            total = total + term if pos % 2 == 0 else total - term
        memo[mask] = total
        return total

    return pf((1 << n) - 1)


def determinant(a) -> Poly:
    """Exact determinant by Laplace expansion along rows, memoized on column subsets."""
    rows = a.rows if isinstance(a, SkewMatrix) else tuple(tuple(Poly.coerce(x) for x in r) for r in a)
    n = len(rows)
    memo: Dict[int, Poly] = {0: ONE}

    def det(cols: int) -> Poly:
        if cols in memo:
            return memo[cols]
        k = n - bin(cols).count("1")
        total = ZERO
        rank = 0
        for j in range(n):
            if not cols >> j & 1:
                continue
            entry = rows[k][j]
            if entry:
                term = entry * det(cols & ~(1 << j))
                total = total + term if rank % 2 == 0 else total - term
            rank += 1
        memo[cols] = total
        return total

    return det((1 << n) - 1)
