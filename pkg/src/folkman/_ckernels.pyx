# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels on 64-bit word bitsets.

Same call signatures as :mod:`folkman._pykernels`. Graphs with more than 64
vertices are handed to the pure-Python kernels.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

from folkman import _pykernels

BACKEND = "cython"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef inline int popc(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x)

cdef inline int ctz(uint64_t x) noexcept nogil:
    return __builtin_ctzll(x)

DEF MAXN = 64


cdef int _load(object rows, uint64_t* out) except -1:
    cdef int i = 0
    for r in rows:
        out[i] = <uint64_t> r
        i += 1
    return i


# --- maximum clique -------------------------------------------------------

cdef struct CliqueState:
    uint64_t* rows
    int best_size
    int stack_size
    int stack[MAXN]
    int best[MAXN]


cdef void _expand(CliqueState* st, uint64_t cand) noexcept nogil:
    cdef int order[MAXN]
    cdef int bounds[MAXN]
    cdef int cnt = 0, color = 0, i, v
    cdef uint64_t uncolored = cand, avail, low
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            low = avail & (~avail + 1)
            v = ctz(avail)
            avail &= ~st.rows[v] & ~low
            uncolored &= ~low
            order[cnt] = v
            bounds[cnt] = color
            cnt += 1
    i = cnt - 1
    while i >= 0:
        if st.stack_size + bounds[i] <= st.best_size:
            return
        v = order[i]
        st.stack[st.stack_size] = v
        st.stack_size += 1
        if cand & st.rows[v]:
            _expand(st, cand & st.rows[v])
        elif st.stack_size > st.best_size:
            st.best_size = st.stack_size
            for j in range(st.stack_size):
                st.best[j] = st.stack[j]
        st.stack_size -= 1
        cand &= ~((<uint64_t>1) << v)
        i -= 1


def max_clique(rows, cand):
    cdef int n = len(rows)
    if n > MAXN:
        return _pykernels.max_clique(rows, cand)
    cdef uint64_t crow[MAXN]
    _load(rows, crow)
    cdef CliqueState st
    st.rows = crow
    st.best_size = 0
    st.stack_size = 0
    cdef uint64_t c = <uint64_t> cand
    if c:
        with nogil:
            _expand(&st, c)
    return sorted([st.best[i] for i in range(st.best_size)])


# --- clique counting ------------------------------------------------------

cdef long long _count(uint64_t* rows, uint64_t cand, int k, long long cap) noexcept nogil:
    cdef long long total = 0, sub_total
    cdef uint64_t low, sub
    cdef int v, n
    if k <= 0:
        return 1
    n = popc(cand)
    if k == 1:
        if cap and n > cap:
            return cap
        return n
    if k == 2:
        # edges inside cand
        while cand:
            v = ctz(cand)
            cand &= cand - 1
            total += popc(cand & rows[v])
            if cap and total >= cap:
                return cap
        return total
    while cand:
        if popc(cand) < k:
            break
        v = ctz(cand)
        cand &= cand - 1
        sub = cand & rows[v]
        if popc(sub) >= k - 1:
            sub_total = _count(rows, sub, k - 1, (cap - total) if cap else 0)
            total += sub_total
            if cap and total >= cap:
                return cap
    return total


def count_cliques(rows, cand, int k, long long cap=0):
    cdef int n = len(rows)
    if n > MAXN:
        return _pykernels.count_cliques(rows, cand, k, cap)
    cdef uint64_t crow[MAXN]
    _load(rows, crow)
    cdef uint64_t c = <uint64_t> cand
    cdef long long r
    with nogil:
        r = _count(crow, c, k, cap)
    return r


def flip_deltas(rows, crows, int n, int p, int q, long long cap=0):
    if n > MAXN:
        return _pykernels.flip_deltas(rows, crows, n, p, q, cap)
    cdef uint64_t r[MAXN]
    cdef uint64_t cr[MAXN]
    _load(rows, r)
    _load(crows, cr)
    cdef int npairs = n * (n - 1) // 2
    cdef long long* out = <long long*> malloc(2 * npairs * sizeof(long long))
    cdef int u, v, idx = 0
    cdef uint64_t common, noncommon
    try:
        with nogil:
            for u in range(n):
                for v in range(u + 1, n):
                    common = r[u] & r[v]
                    noncommon = cr[u] & cr[v]
                    if (r[u] >> v) & 1:
                        out[idx] = -_count(r, common, p - 2, cap)
                        out[idx + 1] = _count(cr, noncommon, q - 2, cap)
                    else:
                        out[idx] = _count(r, common, p - 2, cap)
                        out[idx + 1] = -_count(cr, noncommon, q - 2, cap)
                    idx += 2
        return [out[i] for i in range(2 * npairs)]
    finally:
        free(out)


# --- exact colouring ------------------------------------------------------

cdef struct ColorState:
    uint64_t* rows
    int n
    int used
    uint64_t classes[MAXN + 1]
    int colors[MAXN]
    int best
    int best_colors[MAXN]
    int have_best
    int stop_at
    long long nodes
    long long node_limit
    int aborted


cdef int _color_rec(ColorState* st, uint64_t uncolored) noexcept nogil:
    cdef int used = st.used
    cdef int pick = -1, pick_sat = -1, pick_deg = -1, sat, deg, v, c, i
    cdef uint64_t pick_forbidden = 0, forbidden, row, u, rest
    st.nodes += 1
    if st.node_limit and st.nodes > st.node_limit:
        st.aborted = 1
        return 1
    if not uncolored:
        if used < st.best:
            st.best = used
            st.have_best = 1
            for i in range(st.n):
                st.best_colors[i] = st.colors[i]
        return used <= st.stop_at
    u = uncolored
    while u:
        v = ctz(u)
        u &= u - 1
        row = st.rows[v]
        forbidden = 0
        sat = 0
        for c in range(used):
            if st.classes[c] & row:
                forbidden |= (<uint64_t>1) << c
                sat += 1
        if sat > pick_sat:
            pick = v
            pick_sat = sat
            pick_forbidden = forbidden
            pick_deg = popc(row & uncolored)
        elif sat == pick_sat:
            deg = popc(row & uncolored)
            if deg > pick_deg:
                pick = v
                pick_deg = deg
                pick_forbidden = forbidden
    rest = uncolored & ~((<uint64_t>1) << pick)
    for c in range(used):
        if (pick_forbidden >> c) & 1:
            continue
        st.classes[c] |= (<uint64_t>1) << pick
        st.colors[pick] = c
        if _color_rec(st, rest):
            st.classes[c] &= ~((<uint64_t>1) << pick)
            st.colors[pick] = -1
            return 1
        st.classes[c] &= ~((<uint64_t>1) << pick)
        st.colors[pick] = -1
    if used + 1 < st.best:
        st.classes[used] = (<uint64_t>1) << pick
        st.colors[pick] = used
        st.used = used + 1
        if _color_rec(st, rest):
            st.used = used
            st.classes[used] = 0
            st.colors[pick] = -1
            return 1
        st.used = used
        st.classes[used] = 0
        st.colors[pick] = -1
    return 0


def color_search(rows, int n, clique, int best, best_colors, int stop_at, long long node_limit=0):
    if n > MAXN:
        return _pykernels.color_search(rows, n, clique, best, best_colors, stop_at, node_limit)
    cdef uint64_t r[MAXN]
    _load(rows, r)
    cdef ColorState st
    cdef int i
    st.rows = r
    st.n = n
    st.used = 0
    st.best = best
    st.have_best = 0
    st.stop_at = stop_at
    st.nodes = 0
    st.node_limit = node_limit
    st.aborted = 0
    for i in range(MAXN + 1):
        st.classes[i] = 0
    for i in range(n):
        st.colors[i] = -1
    cdef uint64_t uncolored = ((<uint64_t>1) << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    for v in clique:
        st.colors[v] = st.used
        st.classes[st.used] = (<uint64_t>1) << <int>v
        st.used += 1
        uncolored &= ~((<uint64_t>1) << <int>v)
    if st.used < st.best:
        with nogil:
            _color_rec(&st, uncolored)
    colors = [st.best_colors[i] for i in range(n)] if st.have_best else best_colors
    return st.best, colors, st.nodes, not st.aborted
