"""Dense GF(2) linear algebra on numpy uint8 arrays.

Gaussian elimination with XOR row operations; enough for symplectic rank
checks and for decomposing zero-syndrome errors over generator sets.
"""

from __future__ import annotations

import numpy as np

__all__ = ["row_reduce", "rank", "Gf2Solver"]


def row_reduce(M: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form over GF(2).

    Returns ``(R, pivot_cols)``; the rank is ``len(pivot_cols)``.
    """
    R = (np.asarray(M, dtype=np.uint8) % 2).copy()
    if R.ndim != 2:
        raise ValueError("expected a matrix")
    m, n = R.shape
    pivot_cols: list[int] = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        hits = np.nonzero(R[row:, col])[0]
        if hits.size == 0:
            continue
        pivot = row + int(hits[0])
        if pivot != row:
            R[[row, pivot]] = R[[pivot, row]]
        for r in range(m):
            if r != row and R[r, col]:
                R[r] ^= R[row]
        pivot_cols.append(col)
        row += 1
    return R, pivot_cols


def rank(M: np.ndarray) -> int:
    return len(row_reduce(M)[1])


class Gf2Solver:
    """Solve ``x @ A = v`` over GF(2) for a fixed row matrix ``A``.

    Rows of ``A`` are the generators; a solution is returned as the sorted
    list of generator indices whose XOR equals ``v``, or None when ``v``
    is outside the row span.  The elimination is done once; solving is a
    cheap back-substitution.
    """

    def __init__(self, A: np.ndarray):
        A = (np.asarray(A, dtype=np.uint8) % 2).copy()
        m, n = A.shape
        # Track row operations on an identity block: R = T @ A.
        aug = np.hstack([A, np.eye(m, dtype=np.uint8)])
        R, pivots = row_reduce(aug)
        # Keep only pivots inside the A block.
        self.n = n
        self.m = m
        self._pivots = [c for c in pivots if c < n]
        self._rows = R[: len(self._pivots), :n]
        self._trans = R[: len(self._pivots), n:]

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def solve(self, v: np.ndarray) -> list[int] | None:
        v = (np.asarray(v, dtype=np.uint8) % 2).copy()
        combo = np.zeros(self.m, dtype=np.uint8)
        for i, col in enumerate(self._pivots):
            if v[col]:
                v ^= self._rows[i]
                combo ^= self._trans[i]
        if v.any():
            return None
        return sorted(int(i) for i in np.nonzero(combo)[0])
