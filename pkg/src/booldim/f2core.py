"""Bit-packed symmetric linear algebra over the two-element field.

Matrices are immutable: n bit-rows packed into Python ints (bit j of row i is
entry (i, j)), capped at n = 64 so a row always fits one machine word in the
compiled kernels.  This module owns rank computation, diagonal perturbation,
the Gray-code diagonal sweeps behind the minrank-style searches, and the
orthonormal/symplectic basis extraction used to build representation
witnesses.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from ._backend import kernels
from .errors import CapacityError

MAX_N = 64

#: Diagonal masks are plain ints; bit i set means diagonal entry (i, i) is 1.
DiagonalMask = int


@dataclass(frozen=True)
class F2Matrix:
    """Square 0/1 matrix over GF(2) as a tuple of row bitmasks."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("matrix size must be nonnegative")
        if self.n > MAX_N:
            raise CapacityError(f"matrices are capped at n = {MAX_N}, got {self.n}")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        limit = 1 << self.n
        for i, row in enumerate(self.rows):
            if not 0 <= row < limit:
                raise ValueError(f"row {i} has bits outside 0..{self.n - 1}")

    @classmethod
    def zeros(cls, n: int) -> "F2Matrix":
        return cls(n, (0,) * n)

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_lists(cls, entries) -> "F2Matrix":
        """Build from a list of 0/1 lists (row-major)."""
        n = len(entries)
        rows = []
        for row in entries:
            if len(row) != n:
                raise ValueError("matrix must be square")
            rows.append(sum((1 << j) for j, v in enumerate(row) if v & 1))
        return cls(n, tuple(rows))

    def bit(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[self.bit(i, j) for j in range(self.n)] for i in range(self.n)]

    def is_symmetric(self) -> bool:
        return all(
            self.bit(i, j) == self.bit(j, i)
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )


def _require_symmetric(m: F2Matrix):
    if not m.is_symmetric():
        raise ValueError("operation requires a symmetric matrix")


def rank(m: F2Matrix) -> int:
    """GF(2) row rank; the input is never modified."""
    return kernels.rank(m.rows, m.n)


def add_diagonal(m: F2Matrix, mask: DiagonalMask) -> F2Matrix:
    """XOR the diagonal with ``mask`` (entry i flips iff bit i of mask is set).

    For the zero-diagonal adjacency matrices this library feeds in, the
    result's diagonal equals the mask.
    """
    _require_symmetric(m)
    if not 0 <= mask < (1 << m.n):
        raise ValueError("diagonal mask does not match the matrix size")
    rows = tuple(m.rows[i] ^ (((mask >> i) & 1) << i) for i in range(m.n))
    return F2Matrix(m.n, rows)


def is_alternating(m: F2Matrix) -> bool:
    """True iff every diagonal entry is zero."""
    return all(((m.rows[i] >> i) & 1) == 0 for i in range(m.n))


def _deadline(budget_s: float | None) -> float | None:
    return None if budget_s is None else time.monotonic() + budget_s


def minrank_sweep(
    m: F2Matrix,
    *,
    stop_at: int = 0,
    workers: int = 1,
    budget_s: float | None = None,
) -> tuple[int, DiagonalMask]:
    """Minimum of rank(m + D) over all 2^n diagonal masks D.

    Masks are visited in Gray-code order; the witness is the first mask in
    that order attaining the minimum, independent of ``workers``.  The scan
    stops once the running minimum reaches ``stop_at``.
    """
    _require_symmetric(m)
    best, mask, _ = _run_sweep(m, False, stop_at, workers, budget_s)
    return best, mask


def inner_cost_sweep(
    m: F2Matrix,
    *,
    stop_at: int = 0,
    workers: int = 1,
    budget_s: float | None = None,
) -> tuple[int, DiagonalMask]:
    """Minimum inner-realizability cost over all diagonal perturbations.

    A symmetric Gram matrix with a nonzero diagonal entry of rank r is
    realizable with the standard scalar product in dimension r; an alternating
    one (zero diagonal, which for a zero-diagonal input happens exactly at
    D = 0) of rank 2m > 0 needs 2m + 1 coordinates, since every image vector
    must sit inside the even-weight hyperplane.  Rank 0 costs 0.
    """
    _require_symmetric(m)
    if not is_alternating(m):
        raise ValueError("inner cost sweep expects a zero-diagonal matrix")
    best, mask, _ = _run_sweep(m, True, stop_at, workers, budget_s)
    return best, mask


def _run_sweep(m, boolean_mode, stop_at, workers, budget_s):
    deadline = _deadline(budget_s)
    total = 1 << m.n
    if workers <= 1 or total < 4096:
        return kernels.diagonal_sweep(m.rows, m.n, boolean_mode, stop_at, 0, total, deadline)
    from ._parallel import run_tasks

    chunk = -(-total // workers)
    tasks = [
        (kernels.diagonal_sweep, (m.rows, m.n, boolean_mode, stop_at, lo, min(lo + chunk, total), deadline))
        for lo in range(0, total, chunk)
    ]
    results = run_tasks(tasks, workers)
    # Deterministic reduction: least cost, then earliest Gray position.
    best = (m.n + 2, -1, -1)
    for cost, mask, pos in results:
        if mask >= 0 and (cost, pos) < (best[0], best[2] if best[2] >= 0 else 1 << m.n):
            best = (cost, mask, pos)
    return best


# ---------------------------------------------------------------------------
# Basis extraction for representation witnesses
# ---------------------------------------------------------------------------
#
# Vectors below are coefficient bitmasks over the standard basis e_0..e_{n-1};
# the bilinear form of a symmetric matrix B evaluates as
# phi(x, y) = parity(x & (B y)).


def form_value(m: F2Matrix, x: int, y: int) -> int:
    """phi(x, y) for the symmetric bilinear form with Gram matrix m."""
    by = 0
    rest = y
    while rest:
        low = rest & -rest
        by ^= m.rows[low.bit_length() - 1]
        rest ^= low
    return (x & by).bit_count() & 1


def orthonormal_basis(m: F2Matrix) -> list[int]:
    """Orthonormal basis of a complement of the radical of a non-alternating form.

    Returns rank(m) vectors u_k with phi(u_k, u_l) = delta_kl.  Greedy
    extraction of non-isotropic vectors first; if an alternating block is left
    over, each of its hyperbolic pairs (a, b) is merged with one orthonormal
    vector u via the isometry {u, a, b} -> {u+a, u+b, u+a+b}.
    """
    _require_symmetric(m)
    if is_alternating(m) and rank(m) > 0:
        raise ValueError("form is alternating; no orthonormal basis exists")
    vectors = [1 << i for i in range(m.n)]
    ortho: list[int] = []
    while True:
        pick = -1
        for idx, v in enumerate(vectors):
            if form_value(m, v, v):
                pick = idx
                break
        if pick < 0:
            break
        u = vectors.pop(pick)
        vectors = [v ^ u if form_value(m, v, u) else v for v in vectors]
        ortho.append(u)
    pairs = _extract_pairs(m, vectors)
    if pairs:
        u = ortho.pop()
        for a, b in pairs:
            ortho.append(u ^ a)
            ortho.append(u ^ b)
            u = u ^ a ^ b
        ortho.append(u)
    return ortho


def symplectic_pairs(m: F2Matrix) -> list[tuple[int, int]]:
    """Hyperbolic pairs (a_k, b_k) spanning a complement of the radical.

    Requires an alternating form; phi(a_k, b_k) = 1 and all other products
    among the returned vectors vanish, so rank(m) = 2 * len(pairs).
    """
    _require_symmetric(m)
    if not is_alternating(m):
        raise ValueError("symplectic pair extraction expects a zero diagonal")
    return _extract_pairs(m, [1 << i for i in range(m.n)])


def symplectic_pairs_in(m: F2Matrix, spanning) -> list[tuple[int, int]]:
    """Hyperbolic pairs inside the span of the given vectors.

    The form restricted to that span must be alternating, which the caller
    guarantees (every spanning vector, and hence every combination, isotropic).
    """
    _require_symmetric(m)
    return _extract_pairs(m, list(spanning))


def _extract_pairs(m, vectors):
    pairs = []
    vectors = list(vectors)
    while True:
        found = None
        for i in range(len(vectors)):
            for j in range(i + 1, len(vectors)):
                if form_value(m, vectors[i], vectors[j]):
                    found = (i, j)
                    break
            if found:
                break
        if not found:
            break
        i, j = found
        b = vectors.pop(j)
        a = vectors.pop(i)
        fixed = []
        for x in vectors:
            if form_value(m, x, b):
                x ^= a
            if form_value(m, x, a):
                x ^= b
            fixed.append(x)
        vectors = fixed
        pairs.append((a, b))
    return pairs
