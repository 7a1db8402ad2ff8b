"""Bit-packed GF(2) kernels, pure-Python reference implementation.

A matrix lives as a sequence of row bitmasks: bit j of ``rows[i]`` is entry
(i, j).  Everything here is a pure function of its arguments, so workers can
call these concurrently, and chunked calls reduce deterministically.

booldim._kernels_cy mirrors this module function for function; the backend
active at import time is chosen by booldim._backend.
"""

from __future__ import annotations

import time
from itertools import permutations

from .errors import BudgetExceededError

MAX_N = 64

# Deadline polling granularity for the inner sweep loops.
_CHECK_MASK = 0x3FF


def _check_deadline(deadline):
    if deadline is not None and time.monotonic() > deadline:
        raise BudgetExceededError("search exceeded its time budget")


def rank(rows, n: int) -> int:
    """GF(2) rank via column-pivot Gaussian elimination on bit-rows."""
    work = list(rows)
    r = 0
    for col in range(n):
        bit = 1 << col
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
        if r == n:
            break
    return r


def rank_capped(rows, n: int, cap: int) -> int:
    """Like rank(), but gives up and returns ``cap`` once the partial rank
    reaches it.  Exact whenever the result is below ``cap``."""
    if cap <= 0:
        return cap
    work = list(rows)
    r = 0
    for col in range(n):
        bit = 1 << col
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


def diagonal_sweep(
    rows,
    n: int,
    boolean_mode: bool,
    stop_at: int,
    start: int,
    stop: int,
    deadline: float | None = None,
    cap: int | None = None,
):
    """Minimise the diagonal-perturbation cost over a Gray-code mask range.

    Position p in [start, stop) denotes the diagonal mask gray(p) = p ^ (p >> 1),
    so successive masks differ in one diagonal bit.  The cost of mask D is
    rank(A + D); in boolean mode the D = 0 matrix is alternating (the input has
    a zero diagonal) and a nonzero alternating Gram matrix needs one extra
    coordinate, so its cost is 0 for rank 0 and rank + 1 otherwise.

    Returns ``(best_cost, best_mask, best_pos)`` where best_pos is the first
    position attaining best_cost.  Stops scanning early once
    best_cost <= stop_at.  ``cap`` seeds the running minimum: costs >= cap are
    never reported (best_mask/best_pos come back -1 if nothing beat it).
    """
    best = n + 2 if cap is None else cap
    best_mask = -1
    best_pos = -1
    for pos in range(start, stop):
        if not (pos & _CHECK_MASK):
            _check_deadline(deadline)
        mask = pos ^ (pos >> 1)
        if mask == 0:
            r0 = rank(rows, n)
            if boolean_mode:
                cost = 0 if r0 == 0 else r0 + 1
            else:
                cost = r0
            if cost >= best:
                continue
        else:
            work = [rows[i] ^ (((mask >> i) & 1) << i) for i in range(n)]
            cost = rank_capped(work, n, best)
            if cost >= best:
                continue
        best, best_mask, best_pos = cost, mask, pos
        if best <= stop_at:
            break
    return best, best_mask, best_pos


# ---------------------------------------------------------------------------
# Tournament search
# ---------------------------------------------------------------------------


def _cheap_dim_bound(dis, n: int) -> int:
    """Lower bound on the final boolean cost from a partial disagreement graph.

    0 for no edges; 1 when the edges so far form exactly a clique on their
    support (the only graphs of dimension 1); else 2.  Sound because the
    boolean dimension is monotone under induced subgraphs and the prefix
    subgraph is already final.
    """
    support = 0
    for v in range(n):
        if dis[v]:
            support |= 1 << v
    if support == 0:
        return 0
    for v in range(n):
        bit = 1 << v
        if support & bit and dis[v] != support ^ bit:
            return 2
    return 1


def inversion_search(
    arcs,
    n: int,
    incumbent: int,
    first_vertex: int = -1,
    probe_depth: int = 0,
    deadline: float | None = None,
):
    """Scan target orders for a disagreement graph of cost below ``incumbent``.

    Orders are visited lexicographically; for each complete order the
    disagreement graph (pairs whose arc opposes the order) gets a full
    boolean-mode diagonal sweep capped at the running best.  A prefix is
    abandoned when a lower bound on any completion already meets the running
    best: the cheap 0/1/2 bound at every node, plus an exact boolean sweep of
    the prefix subgraph at every depth from ``probe_depth`` on (0 disables the
    probe).

    ``first_vertex`` restricts the scan to orders starting there (-1 = all),
    which is how workers partition the space.  Returns (best, perm, mask) for
    the lexicographically first order strictly below ``incumbent``, or None.
    """
    best = incumbent
    best_perm = None
    best_mask = -1
    if best <= 1:
        # An improvement would mean cost 0, i.e. the order is a topological
        # order; cost 0 is handled by the caller via the acyclicity check.
        return None
    dis = [0] * n
    perm = []
    used = 0
    full = 1 << n

    def rec(depth):
        nonlocal best, best_perm, best_mask
        if depth == n:
            cost, mask, _ = diagonal_sweep(
                dis, n, True, 1, 0, full, deadline, cap=best
            )
            if cost < best:
                best = cost
                best_perm = tuple(perm)
                best_mask = mask
            return best > 1
        for v in range(n):
            bit = 1 << v
            if used & bit:
                continue
            if depth == 0 and first_vertex >= 0 and v != first_vertex:
                continue
            new_edges = arcs[v] & used
            _place(v, new_edges)
            bound = _cheap_dim_bound(dis, n)
            keep_going = True
            if bound < best and probe_depth and probe_depth <= depth + 1 < n:
                if _prefix_dim_at_least(best):
                    bound = best
            if bound < best:
                keep_going = rec(depth + 1)
            _unplace(v, new_edges)
            if not keep_going:
                return False
        return True

    def _place(v, new_edges):
        nonlocal used
        dis[v] = new_edges
        m = new_edges
        while m:
            low = m & -m
            dis[low.bit_length() - 1] |= 1 << v
            m ^= low
        used |= 1 << v
        perm.append(v)

    def _unplace(v, new_edges):
        nonlocal used
        perm.pop()
        used ^= 1 << v
        dis[v] = 0
        m = new_edges
        while m:
            low = m & -m
            dis[low.bit_length() - 1] &= ~(1 << v)
            m ^= low

    def _prefix_dim_at_least(threshold):
        p = len(perm)
        sub = []
        for a in range(p):
            row = 0
            ra = dis[perm[a]]
            for b in range(p):
                if (ra >> perm[b]) & 1:
                    row |= 1 << b
            sub.append(row)
        # Only the comparison against threshold matters, so the sweep may stop
        # at the first cost below it.
        got, _, _ = diagonal_sweep(
            sub, p, True, threshold - 1, 0, 1 << p, deadline, cap=threshold
        )
        return got >= threshold

    rec(0)
    if best_perm is None:
        return None
    return best, best_perm, best_mask


def _reversed_bits(x: int, n: int) -> int:
    out = 0
    for j in range(n):
        if (x >> j) & 1:
            out |= 1 << (n - 1 - j)
    return out


def canon_tournament(arcs, n: int):
    """Lexicographically least arc matrix over all vertex relabelings.

    Rows are compared as the row-major bit-string (entry (i, j) read with j
    ascending), realised by comparing bit-reversed row integers.
    """
    best_key = None
    best_rows = None
    for p in permutations(range(n)):
        new_rows = [0] * n
        for i in range(n):
            src = arcs[i]
            dst = 0
            while src:
                low = src & -src
                dst |= 1 << p[low.bit_length() - 1]
                src ^= low
            new_rows[p[i]] = dst
        key = tuple(_reversed_bits(r, n) for r in new_rows)
        if best_key is None or key < best_key:
            best_key = key
            best_rows = tuple(new_rows)
    return best_rows if best_rows is not None else ()
