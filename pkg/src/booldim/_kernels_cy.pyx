# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(2) kernels; mirrors booldim._kernels_py function for function.

Rows travel in and out as Python int sequences but live in C uint64 arrays
inside (hence the package-wide n <= 64 cap).
"""

import time

from libc.string cimport memcpy

from .errors import BudgetExceededError

ctypedef unsigned long long u64

MAX_N = 64

cdef long _CHECK_MASK = 0x3FF


cdef inline int _rank_c(u64 *rows, int n, int cap) nogil:
    """Column-pivot elimination; stops at cap (pass n + 1 for the exact rank)."""
    cdef u64 work[64]
    cdef u64 bit, prow
    cdef int col, i, piv, r = 0
    if cap <= 0:
        return 0
    memcpy(work, rows, n * sizeof(u64))
    for col in range(n):
        bit = (<u64>1) << col
        piv = -1
        for i in range(r, n):
            if work[i] & bit:
                piv = i
                break
        if piv < 0:
            continue
        work[piv], work[r] = work[r], work[piv]
        prow = work[r]
        for i in range(r + 1, n):
            if work[i] & bit:
                work[i] ^= prow
        r += 1
        if r >= cap:
            return cap
    return r


cdef inline void _load_rows(object rows, int n, u64 *out) except *:
    cdef int i
    for i in range(n):
        out[i] = rows[i]


def rank(rows, int n):
    """GF(2) rank via column-pivot Gaussian elimination on bit-rows."""
    cdef u64 buf[64]
    _load_rows(rows, n, buf)
    return _rank_c(buf, n, n + 1)


def rank_capped(rows, int n, int cap):
    """Like rank(), but gives up and returns ``cap`` once the partial rank
    reaches it.  Exact whenever the result is below ``cap``."""
    cdef u64 buf[64]
    if cap <= 0:
        return cap
    _load_rows(rows, n, buf)
    return _rank_c(buf, n, cap)


cdef inline bint _deadline_passed(double deadline):
    return deadline > 0 and time.monotonic() > deadline


cdef double _as_deadline(object deadline):
    return -1.0 if deadline is None else <double>deadline


def diagonal_sweep(
    rows,
    int n,
    bint boolean_mode,
    int stop_at,
    long long start,
    long long stop,
    deadline=None,
    cap=None,
):
    """Minimise the diagonal-perturbation cost over a Gray-code mask range.

    Same contract as the pure version: position p means mask p ^ (p >> 1); in
    boolean mode the zero mask (alternating matrix) costs rank + 1 unless the
    rank is 0.  Returns (best_cost, best_mask, best_pos); -1 markers when
    nothing beat ``cap``.
    """
    cdef u64 base[64]
    cdef u64 work[64]
    cdef int best = n + 2 if cap is None else <int>cap
    cdef long long best_mask = -1
    cdef long long best_pos = -1
    cdef long long pos
    cdef u64 mask
    cdef int i, cost, r0
    cdef double dl = _as_deadline(deadline)
    _load_rows(rows, n, base)
    for pos in range(start, stop):
        if not (pos & _CHECK_MASK):
            if _deadline_passed(dl):
                raise BudgetExceededError("search exceeded its time budget")
        mask = (<u64>pos) ^ ((<u64>pos) >> 1)
        if mask == 0:
            r0 = _rank_c(base, n, n + 1)
            if boolean_mode:
                cost = 0 if r0 == 0 else r0 + 1
            else:
                cost = r0
            if cost >= best:
                continue
        else:
            for i in range(n):
                work[i] = base[i] ^ (((mask >> i) & 1) << i)
            cost = _rank_c(work, n, best)
            if cost >= best:
                continue
        best = cost
        best_mask = <long long>mask
        best_pos = pos
        if best <= stop_at:
            break
    return best, best_mask, best_pos


# ---------------------------------------------------------------------------
# Tournament search
# ---------------------------------------------------------------------------

cdef struct SearchState:
    int n
    int best
    int first_vertex
    int probe_depth
    bint have_best
    u64 used
    u64 best_mask
    double deadline
    u64 arcs[64]
    u64 dis[64]
    int perm[64]
    int best_perm[64]


cdef int _cheap_dim_bound_c(SearchState *s) nogil:
    cdef u64 support = 0
    cdef int v
    for v in range(s.n):
        if s.dis[v]:
            support |= (<u64>1) << v
    if support == 0:
        return 0
    for v in range(s.n):
        if (support >> v) & 1:
            if s.dis[v] != (support ^ ((<u64>1) << v)):
                return 2
    return 1


cdef int _leaf_sweep(SearchState *s, u64 *rows, int n, int cap, int stop_at,
                     u64 *out_mask) except -1:
    """Boolean-mode sweep over all masks of an n-vertex matrix, capped; mirrors
    diagonal_sweep semantics (first achiever in Gray order)."""
    cdef u64 work[64]
    cdef int best = cap
    cdef long long pos, total = (<long long>1) << n
    cdef u64 mask
    cdef int i, cost, r0
    for pos in range(total):
        if not (pos & _CHECK_MASK):
            if _deadline_passed(s.deadline):
                raise BudgetExceededError("search exceeded its time budget")
        mask = (<u64>pos) ^ ((<u64>pos) >> 1)
        if mask == 0:
            r0 = _rank_c(rows, n, n + 1)
            cost = 0 if r0 == 0 else r0 + 1
        else:
            for i in range(n):
                work[i] = rows[i] ^ (((mask >> i) & 1) << i)
            cost = _rank_c(work, n, best)
        if cost < best:
            best = cost
            out_mask[0] = mask
            if best <= stop_at:
                break
    return best


cdef int _prefix_dim_at_least(SearchState *s, int depth, int threshold) except -1:
    cdef u64 sub[64]
    cdef u64 ra
    cdef u64 dummy_mask = 0
    cdef int a, b
    for a in range(depth):
        sub[a] = 0
        ra = s.dis[s.perm[a]]
        for b in range(depth):
            if (ra >> s.perm[b]) & 1:
                sub[a] |= (<u64>1) << b
    # Only the comparison against threshold matters, so the sweep may stop
    # at the first cost below it.
    return _leaf_sweep(s, sub, depth, threshold, threshold - 1, &dummy_mask) >= threshold


cdef int _rec(SearchState *s, int depth) except -1:
    """Returns 1 to keep scanning siblings, 0 to stop the whole search."""
    cdef int v, i, cost, bound
    cdef u64 bit, new_edges, m, leaf_mask
    if depth == s.n:
        leaf_mask = 0
        cost = _leaf_sweep(s, s.dis, s.n, s.best, 1, &leaf_mask)
        if cost < s.best:
            s.best = cost
            s.best_mask = leaf_mask
            s.have_best = True
            for i in range(s.n):
                s.best_perm[i] = s.perm[i]
        return 1 if s.best > 1 else 0
    for v in range(s.n):
        bit = (<u64>1) << v
        if s.used & bit:
            continue
        if depth == 0 and s.first_vertex >= 0 and v != s.first_vertex:
            continue
        new_edges = s.arcs[v] & s.used
        # place
        s.dis[v] = new_edges
        m = new_edges
        while m:
            i = _lowbit_index(m)
            s.dis[i] |= bit
            m &= m - 1
        s.used |= bit
        s.perm[depth] = v
        bound = _cheap_dim_bound_c(s)
        if bound < s.best and s.probe_depth and s.probe_depth <= depth + 1 < s.n:
            if _prefix_dim_at_least(s, depth + 1, s.best):
                bound = s.best
        if bound < s.best:
            if not _rec(s, depth + 1):
                _unplace(s, v, new_edges)
                return 0
        _unplace(s, v, new_edges)
    return 1


cdef inline int _lowbit_index(u64 m) nogil:
    cdef int i = 0
    while not (m & 1):
        m >>= 1
        i += 1
    return i


cdef inline void _unplace(SearchState *s, int v, u64 new_edges) nogil:
    cdef u64 bit = (<u64>1) << v
    cdef u64 m = new_edges
    cdef int i
    s.used ^= bit
    s.dis[v] = 0
    while m:
        i = _lowbit_index(m)
        s.dis[i] &= ~bit
        m &= m - 1


def inversion_search(
    arcs,
    int n,
    int incumbent,
    int first_vertex=-1,
    int probe_depth=0,
    deadline=None,
):
    """Scan target orders for a disagreement graph of cost below ``incumbent``.

    Same contract as the pure version: lexicographic order scan with the
    cheap 0/1/2 prefix bound, exact prefix probes from probe_depth on, and a
    capped boolean sweep per complete order.  Returns (best, perm, mask) or None.
    """
    cdef SearchState s
    cdef int i
    if incumbent <= 1:
        return None
    s.n = n
    s.best = incumbent
    s.first_vertex = first_vertex
    s.probe_depth = probe_depth
    s.have_best = False
    s.used = 0
    s.best_mask = 0
    s.deadline = _as_deadline(deadline)
    for i in range(n):
        s.arcs[i] = arcs[i]
        s.dis[i] = 0
    _rec(&s, 0)
    if not s.have_best:
        return None
    return s.best, tuple(s.best_perm[i] for i in range(n)), <long long>s.best_mask


# ---------------------------------------------------------------------------
# Canonical forms
# ---------------------------------------------------------------------------


def canon_tournament(arcs, int n):
    """Lexicographically least arc matrix over all vertex relabelings (rows
    compared as row-major bit-strings, i.e. bit-reversed integers)."""
    cdef u64 base[64]
    cdef u64 best_key[64]
    cdef u64 best_rows[64]
    cdef u64 cur[64]
    cdef u64 key[64]
    cdef int p[64]
    cdef int c[64]
    cdef int i, j, k, cmp_result
    cdef bint have = False
    cdef u64 src, rb
    if n == 0:
        return ()
    _load_rows(arcs, n, base)
    # iterative permutation generation (counter-based Heap's algorithm)
    for i in range(n):
        p[i] = i
        c[i] = 0
    while True:
        # evaluate current permutation p
        for i in range(n):
            cur[i] = 0
        for i in range(n):
            src = base[i]
            for j in range(n):
                if (src >> j) & 1:
                    cur[p[i]] |= (<u64>1) << p[j]
        for i in range(n):
            rb = 0
            for j in range(n):
                if (cur[i] >> j) & 1:
                    rb |= (<u64>1) << (n - 1 - j)
            key[i] = rb
        cmp_result = -1 if not have else 0
        if have:
            for i in range(n):
                if key[i] < best_key[i]:
                    cmp_result = -1
                    break
                if key[i] > best_key[i]:
                    cmp_result = 1
                    break
        if cmp_result < 0:
            for i in range(n):
                best_key[i] = key[i]
                best_rows[i] = cur[i]
            have = True
        # advance Heap's algorithm
        i = 0
        while i < n:
            if c[i] < i:
                if i % 2 == 0:
                    p[0], p[i] = p[i], p[0]
                else:
                    p[c[i]], p[i] = p[i], p[c[i]]
                c[i] += 1
                break
            c[i] = 0
            i += 1
        if i >= n:
            break
    return tuple(best_rows[i] for i in range(n))
