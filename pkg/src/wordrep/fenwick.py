"""Binary indexed tree over word positions.

The public interface is 0-indexed; the tree array is 1-indexed internally and
holds int64 counts.  ``fenwick_add`` and ``fenwick_rangesum`` are compiled
kernels on the raw array so other compiled loops can use them directly;
``FenwickTree`` wraps them with bounds checking.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def fenwick_add(tree, pos, delta):
    n = tree.shape[0] - 1
    j = pos + 1
    while j <= n:
        tree[j] += delta
        j += j & -j


@njit(cache=True)
def fenwick_rangesum(tree, lo, hi):
    # prefix(hi) - prefix(lo - 1), stopping where the two walks meet.
    s = 0
    a = hi + 1
    b = lo
    if b > a:
        return 0
    while a != b:
        if a > b:
            s += tree[a]
            a &= a - 1
        else:
            s -= tree[b]
            b &= b - 1
    return s


class FenwickTree:
    """Point update and inclusive range sum, both O(log size)."""

    __slots__ = ("size", "tree")

    def __init__(self, size: int):
        if size < 1:
            raise ValueError(f"FenwickTree size must be >= 1, got {size}")
        self.size = size
        self.tree = np.zeros(size + 1, dtype=np.int64)

    def __len__(self) -> int:
        return self.size

    def update(self, pos: int, delta: int) -> None:
        if not 0 <= pos < self.size:
            raise IndexError(f"position {pos} out of range [0, {self.size})")
        fenwick_add(self.tree, pos, delta)

    def prefix_sum(self, pos: int) -> int:
        """Sum over positions ``0..pos``; ``pos == -1`` gives 0."""
        if not -1 <= pos < self.size:
            raise IndexError(f"position {pos} out of range [-1, {self.size})")
        return int(fenwick_rangesum(self.tree, 0, pos))

    def rangesum(self, lo: int, hi: int) -> int:
        """Sum over ``lo..hi``; empty (0) when ``lo > hi``.

        ``lo == hi + 1`` is legal even at the ends, e.g. ``rangesum(size, size - 1)``.
        """
        if lo == hi + 1:
            if not 0 <= lo <= self.size:
                raise IndexError(f"empty range ({lo}, {hi}) out of bounds")
            return 0
        for p in (lo, hi):
            if not 0 <= p < self.size:
                raise IndexError(f"position {p} out of range [0, {self.size})")
        if lo > hi:
            return 0
        return int(fenwick_rangesum(self.tree, lo, hi))
