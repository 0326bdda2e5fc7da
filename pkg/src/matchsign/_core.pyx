# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same contract as ``_pycore``."""

from libc.stdlib cimport malloc, free, calloc
from libc.string cimport memcpy
from libc.stdint cimport uint64_t


def enumerate_matchings(int n, us, vs, Py_ssize_t limit):
    cdef Py_ssize_t m = len(us)
    cdef Py_ssize_t i, k
    cdef int v, w, e
    if n % 2:
        return []
    if n == 0:
        return [()]
    cdef int *eu = <int *> malloc(max(m, 1) * sizeof(int))
    cdef int *ev = <int *> malloc(max(m, 1) * sizeof(int))
    cdef int *deg = <int *> calloc(n + 2, sizeof(int))
    cdef int *start = <int *> calloc(n + 2, sizeof(int))
    cdef int *inc = <int *> malloc(max(2 * m, 1) * sizeof(int))
    cdef int *fill = <int *> calloc(n + 2, sizeof(int))
    cdef char *covered = <char *> calloc(n + 2, sizeof(char))
    # per depth: branching vertex, cursor into its incidence list, chosen edge
    cdef int *vert = <int *> malloc((n // 2 + 1) * sizeof(int))
    cdef int *cur = <int *> malloc((n // 2 + 1) * sizeof(int))
    cdef int *chosen = <int *> malloc((n // 2 + 1) * sizeof(int))
    cdef int depth, half = n // 2
    out = []
    try:
        for i in range(m):
            eu[i] = us[i]
            ev[i] = vs[i]
            deg[eu[i]] += 1
            deg[ev[i]] += 1
        for v in range(1, n + 1):
            start[v + 1] = start[v] + deg[v]
        for i in range(m):
            inc[start[eu[i]] + fill[eu[i]]] = <int> i
            fill[eu[i]] += 1
            inc[start[ev[i]] + fill[ev[i]]] = <int> i
            fill[ev[i]] += 1

        depth = 0
        v = 1
        vert[0] = 1
        cur[0] = start[1]
        covered[1] = 1
        while depth >= 0:
            v = vert[depth]
            if cur[depth] > start[v]:
                # undo the previous choice at this depth
                e = chosen[depth]
                w = eu[e] + ev[e] - v
                covered[w] = 0
            while cur[depth] < start[v + 1]:
                e = inc[cur[depth]]
                w = eu[e] + ev[e] - v
                if not covered[w]:
                    break
                cur[depth] += 1
            if cur[depth] >= start[v + 1]:
                covered[v] = 0
                depth -= 1
                if depth >= 0:
                    cur[depth] += 1
                continue
            e = inc[cur[depth]]
            w = eu[e] + ev[e] - v
            covered[w] = 1
            chosen[depth] = e
            if depth + 1 == half:
                row = sorted([chosen[k] for k in range(half)])
                out.append(tuple(row))
                if len(out) > limit:
                    break
                cur[depth] += 1
                continue
            w = v + 1
            while covered[w]:
                w += 1
            depth += 1
            vert[depth] = w
            cur[depth] = start[w]
            covered[w] = 1
    finally:
        free(eu); free(ev); free(deg); free(start); free(inc); free(fill)
        free(covered); free(vert); free(cur); free(chosen)
    return out


def matching_parities(matchings, Py_ssize_t n_edges, const unsigned char[:] parity):
    cdef Py_ssize_t a, b, k, row
    cdef unsigned char p
    cdef int[64] buf
    cdef int *idx
    out = []
    for mt in matchings:
        k = len(mt)
        if k <= 64:
            idx = &buf[0]
        else:
            idx = <int *> malloc(k * sizeof(int))
        try:
            for a in range(k):
                idx[a] = mt[a]
            p = 0
            for a in range(k):
                row = idx[a] * n_edges
                for b in range(a + 1, k):
                    p ^= parity[row + idx[b]]
        finally:
            if k > 64:
                free(idx)
        out.append(p)
    return out


cdef inline void _set_from_int(uint64_t *dst, Py_ssize_t words, object value):
    cdef Py_ssize_t w
    mask = 0xFFFFFFFFFFFFFFFF
    for w in range(words):
        dst[w] = <uint64_t> (value & mask)
        value >>= 64


def gf2_solve(rows, rhs, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t words = (ncols + 1 + 63) // 64
    cdef Py_ssize_t i, k, w, col, r = 0, piv
    cdef uint64_t bit, *a, *tmp
    cdef Py_ssize_t rhs_word = ncols // 64
    cdef uint64_t rhs_mask = (<uint64_t> 1) << (ncols % 64)
    if nrows == 0:
        return 0, 0
    a = <uint64_t *> calloc(nrows * words, sizeof(uint64_t))
    tmp = <uint64_t *> malloc(words * sizeof(uint64_t))
    pivots = []
    rhs_bit = (<object> 1) << ncols
    try:
        for i in range(nrows):
            _set_from_int(a + i * words, words, rows[i] | (rhs_bit if rhs[i] else 0))
        for col in range(ncols):
            w = col // 64
            bit = (<uint64_t> 1) << (col % 64)
            piv = -1
            for k in range(r, nrows):
                if a[k * words + w] & bit:
                    piv = k
                    break
            if piv < 0:
                continue
            if piv != r:
                memcpy(tmp, a + piv * words, words * sizeof(uint64_t))
                memcpy(a + piv * words, a + r * words, words * sizeof(uint64_t))
                memcpy(a + r * words, tmp, words * sizeof(uint64_t))
            for k in range(nrows):
                if k != r and (a[k * words + w] & bit):
                    for i in range(words):
                        a[k * words + i] ^= a[r * words + i]
            pivots.append(col)
            r += 1
            if r == nrows:
                break
        for k in range(r, nrows):
            if a[k * words + rhs_word] & rhs_mask:
                return None, r
        x = 0
        for k in range(len(pivots)):
            if a[k * words + rhs_word] & rhs_mask:
                x |= (<object> 1) << pivots[k]
        return x, r
    finally:
        free(a)
        free(tmp)
