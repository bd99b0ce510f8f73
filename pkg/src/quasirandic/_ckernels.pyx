# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels; drop-in replacement for ``_purepy``."""

from libc.stdint cimport uint64_t, int8_t

import numpy as np
cimport numpy as cnp

cnp.import_array()

NAME = "cython"

cdef extern from *:
    int popcount "__builtin_popcountll"(unsigned long long) nogil
    int ctz "__builtin_ctzll"(unsigned long long) nogil


cdef inline uint64_t _full(int n) noexcept nogil:
    if n >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return ((<uint64_t>1) << n) - 1


cdef inline uint64_t _component(const uint64_t* rows, int start, uint64_t within) noexcept nogil:
    cdef uint64_t seen = (<uint64_t>1) << start
    cdef uint64_t frontier = seen
    cdef uint64_t nxt, w
    while frontier:
        nxt = 0
        w = frontier
        while w:
            nxt |= rows[ctz(w)]
            w &= w - 1
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


cdef int _search(const uint64_t* rows, int n, int first_only, list out) noexcept:
    # out is None when only the number is wanted (no GIL work in the loop then)
    cdef int deg[64]
    cdef int idx[64]
    cdef int v, j, i, t, m = 0, target, dsum, inner, found
    cdef uint64_t S, keep, full = _full(n)
    for v in range(n):
        deg[v] = popcount(rows[v])
        m += deg[v]
    m //= 2
    for j in range(n):
        target = m - (n - j - 1)
        if target < 0:
            continue
        found = 0
        for t in range(j):
            idx[t] = t
        while True:
            S = 0
            dsum = 0
            for t in range(j):
                S |= (<uint64_t>1) << idx[t]
                dsum += deg[idx[t]]
            if dsum >= target:
                inner = 0
                for t in range(j):
                    inner += popcount(rows[idx[t]] & S)
                if dsum - inner // 2 == target:
                    keep = full & ~S
                    if _component(rows, ctz(keep), keep) == keep:
                        found = 1
                        if out is not None:
                            out.append(S)
                        if first_only:
                            return j
            i = j - 1
            while i >= 0 and idx[i] == n - j + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for t in range(i + 1, j):
                idx[t] = idx[t - 1] + 1
        if found:
            return j
    return -1


cdef int _min_k(const uint64_t* rows, int n) noexcept nogil:
    cdef int deg[64]
    cdef int idx[64]
    cdef int v, j, i, t, m = 0, target, dsum, inner
    cdef uint64_t S, keep, full = _full(n)
    for v in range(n):
        deg[v] = popcount(rows[v])
        m += deg[v]
    m //= 2
    for j in range(n):
        target = m - (n - j - 1)
        if target < 0:
            continue
        for t in range(j):
            idx[t] = t
        while True:
            S = 0
            dsum = 0
            for t in range(j):
                S |= (<uint64_t>1) << idx[t]
                dsum += deg[idx[t]]
            if dsum >= target:
                inner = 0
                for t in range(j):
                    inner += popcount(rows[idx[t]] & S)
                if dsum - inner // 2 == target:
                    keep = full & ~S
                    if _component(rows, ctz(keep), keep) == keep:
                        return j
            i = j - 1
            while i >= 0 and idx[i] == n - j + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for t in range(i + 1, j):
                idx[t] = idx[t - 1] + 1
    return -1


cdef int _load(rows, int n, uint64_t* buf) except -1:
    cdef int v
    if not 1 <= n <= 64 or len(rows) != n:
        raise ValueError("need 1 <= n <= 64 and one row per vertex")
    for v in range(n):
        buf[v] = <uint64_t>rows[v]
    return 0


def deletion_search(rows, int n, bint all_witnesses=False):
    """Smallest ``j`` such that deleting some ``j`` vertices leaves a tree, with witness masks."""
    cdef uint64_t buf[64]
    _load(rows, n, buf)
    out = []
    k = _search(buf, n, not all_witnesses, out)
    return k, sorted(out)


def min_deletion(rows, int n):
    cdef uint64_t buf[64]
    _load(rows, n, buf)
    return _min_k(buf, n)


def scan(int n, uint64_t start, uint64_t stop):
    """Connected graphs among edge masks ``start <= mask < stop`` and their deletion numbers."""
    cdef int E = n * (n - 1) // 2
    cdef int pi[64]
    cdef int pj[64]
    cdef int i, j, b = 0, k
    cdef uint64_t rows[64]
    cdef uint64_t mask, w, full = _full(n)
    cdef Py_ssize_t cnt = 0
    if not 1 <= n <= 11:
        raise ValueError("scan supports 1 <= n <= 11")
    for j in range(1, n):
        for i in range(j):
            pi[b] = i
            pj[b] = j
            b += 1
    masks_arr = np.empty(stop - start if stop > start else 0, dtype=np.uint64)
    ks_arr = np.empty(stop - start if stop > start else 0, dtype=np.int8)
    cdef uint64_t[::1] masks = masks_arr
    cdef int8_t[::1] ks = ks_arr
    with nogil:
        mask = start
        while mask < stop:
            if n == 1 or popcount(mask) >= n - 1:
                for i in range(n):
                    rows[i] = 0
                w = mask
                while w:
                    b = ctz(w)
                    rows[pi[b]] |= (<uint64_t>1) << pj[b]
                    rows[pj[b]] |= (<uint64_t>1) << pi[b]
                    w &= w - 1
                if _component(rows, 0, full) == full:
                    masks[cnt] = mask
                    ks[cnt] = <int8_t>_min_k(rows, n)
                    cnt += 1
            mask += 1
    return masks_arr[:cnt].copy(), ks_arr[:cnt].copy()


cdef struct Canon:
    int n
    uint64_t rows[16]
    uint64_t twins[16]
    int perm[16]
    uint64_t used
    uint64_t cur[16]
    uint64_t best[16]
    int have_best


cdef void _canon_dfs(Canon* st, int j) noexcept nogil:
    cdef int v, i, t, c
    cdef uint64_t col
    if j == st.n:
        c = 0
        if st.have_best:
            for t in range(st.n):
                if st.cur[t] != st.best[t]:
                    c = -1 if st.cur[t] < st.best[t] else 1
                    break
        if not st.have_best or c < 0:
            for t in range(st.n):
                st.best[t] = st.cur[t]
            st.have_best = 1
        return
    for v in range(st.n):
        if (st.used >> v) & 1 or (st.twins[v] & ~st.used):
            continue
        col = 0
        for i in range(j):
            col = (col << 1) | ((st.rows[st.perm[i]] >> v) & 1)
        st.cur[j] = col
        if st.have_best:
            c = 0
            for t in range(j + 1):
                if st.cur[t] != st.best[t]:
                    c = -1 if st.cur[t] < st.best[t] else 1
                    break
            if c > 0:
                continue
        st.perm[j] = v
        st.used |= (<uint64_t>1) << v
        _canon_dfs(st, j + 1)
        st.used &= ~((<uint64_t>1) << v)


def canonical_code(rows, int n):
    """Lexicographically smallest upper-triangle bit string over all relabellings (n <= 11)."""
    cdef Canon st
    cdef int u, v, j
    cdef uint64_t code = 0
    if not 1 <= n <= 11 or len(rows) != n:
        raise ValueError("canonical_code supports 1 <= n <= 11")
    if n == 1:
        return 0
    st.n = n
    st.used = 0
    st.have_best = 0
    for v in range(n):
        st.rows[v] = <uint64_t>rows[v]
    for v in range(n):
        st.twins[v] = 0
        for u in range(v):
            if (st.rows[u] & ~((<uint64_t>1) << v)) == (st.rows[v] & ~((<uint64_t>1) << u)):
                st.twins[v] |= (<uint64_t>1) << u
    with nogil:
        _canon_dfs(&st, 0)
    for j in range(n):
        code = (code << j) | st.best[j]
    return code
