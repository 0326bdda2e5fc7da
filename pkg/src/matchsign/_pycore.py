"""Pure-Python kernels. Same contract as the compiled ``_core`` module."""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple


def enumerate_matchings(
    n: int, us: Sequence[int], vs: Sequence[int], limit: int
) -> List[Tuple[int, ...]]:
    """All perfect matchings as sorted tuples of 0-based edge indices.

    Branches on the lowest uncovered vertex (labels are 1..n). Stops after
    ``limit + 1`` matchings so callers can detect overflow.
    """
    if n % 2:
        return []
    incident: List[List[int]] = [[] for _ in range(n + 1)]
    for i, (u, v) in enumerate(zip(us, vs)):
        incident[u].append(i)
        incident[v].append(i)
    covered = [False] * (n + 1)
    chosen: List[int] = []
    out: List[Tuple[int, ...]] = []

    def rec(start: int) -> bool:
        v = start
        while v <= n and covered[v]:
            v += 1
        if v > n:
            out.append(tuple(sorted(chosen)))
            return len(out) > limit
        covered[v] = True
        for i in incident[v]:
            w = us[i] + vs[i] - v
            if covered[w]:
                continue
            covered[w] = True
            chosen.append(i)
            stop = rec(v + 1)
            chosen.pop()
            covered[w] = False
            if stop:
                covered[v] = False
                return True
        covered[v] = False
        return False

    rec(1)
    return out


def matching_parities(
    matchings: Sequence[Sequence[int]], n_edges: int, parity: bytes
) -> List[int]:
    """Per matching, the parity of the summed pairwise crossing counts.

    ``parity[i * n_edges + j]`` holds the crossing parity of edges i and j.
    """
    out = []
    for m in matchings:
        p = 0
        k = len(m)
        for a in range(k):
            row = m[a] * n_edges
            for b in range(a + 1, k):
                p ^= parity[row + m[b]]
        out.append(p)
    return out


def gf2_solve(
    rows: Sequence[int], rhs: Sequence[int], ncols: int
) -> Tuple[Optional[int], int]:
    """Solve ``rows · x = rhs`` over GF(2).

    Rows are int bitsets (bit k = column k). Pivots go to the lowest column
    first and free variables are zero. Returns ``(x, rank)`` with ``x`` None
    when the system is inconsistent.
    """
    rhs_bit = 1 << ncols
    work = [r | (rhs_bit if b else 0) for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(ncols):
        bit = 1 << col
        piv = next((k for k in range(r, len(work)) if work[k] & bit), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        for k in range(len(work)):
            if k != r and work[k] & bit:
                work[k] ^= prow
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    for k in range(r, len(work)):
        if work[k] & rhs_bit:
            return None, r
    x = 0
    for k, col in enumerate(pivots):
        if work[k] & rhs_bit:
            x |= 1 << col
    return x, r
