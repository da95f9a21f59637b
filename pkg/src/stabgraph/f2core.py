"""Bit-packed linear algebra over GF(2).

Rows are stored as Python integers (bit i = column i), so row operations
are single XORs regardless of width.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class BinMatrix:
    """A rows x cols matrix over GF(2), one Python int per row."""

    rows: tuple[int, ...]
    cols: int

    def __post_init__(self):
        mask = (1 << self.cols) - 1
        for r in self.rows:
            if r < 0 or r & ~mask:
                raise ValueError("row value out of range for declared width")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def get(self, i: int, j: int) -> int:
        """Entry (i, j) as 0 or 1."""
        if not (0 <= i < self.nrows and 0 <= j < self.cols):
            raise IndexError("matrix index out of range")
        return (self.rows[i] >> j) & 1

    @staticmethod
    def from_dense(a) -> "BinMatrix":
        """Build from a 2-D array-like of 0/1 entries."""
        a = np.asarray(a, dtype=np.int64) % 2
        if a.ndim != 2:
            raise ValueError("expected a 2-D array")
        rows = tuple(int(sum(int(v) << j for j, v in enumerate(row))) for row in a)
        return BinMatrix(rows, a.shape[1])

    def to_dense(self) -> np.ndarray:
        """Return an (nrows, cols) uint8 array."""
        out = np.zeros((self.nrows, self.cols), dtype=np.uint8)
        for i, r in enumerate(self.rows):
            for j in range(self.cols):
                out[i, j] = (r >> j) & 1
        return out

    @staticmethod
    def identity(n: int) -> "BinMatrix":
        return BinMatrix(tuple(1 << i for i in range(n)), n)

    @staticmethod
    def zeros(nrows: int, cols: int) -> "BinMatrix":
        return BinMatrix((0,) * nrows, cols)

    def mul_vec(self, v: int) -> int:
        """Matrix-vector product over GF(2); v and result are bit-packed."""
        out = 0
        for i, r in enumerate(self.rows):
            out |= ((r & v).bit_count() & 1) << i
        return out

    def transpose(self) -> "BinMatrix":
        rows = []
        for j in range(self.cols):
            r = 0
            for i in range(self.nrows):
                r |= ((self.rows[i] >> j) & 1) << i
            rows.append(r)
        return BinMatrix(tuple(rows), self.nrows)

    def vstack(self, other: "BinMatrix") -> "BinMatrix":
        if self.cols != other.cols:
            raise ValueError("column counts differ")
        return BinMatrix(self.rows + other.rows, self.cols)


def row_reduce(m: BinMatrix) -> tuple[BinMatrix, int]:
    """Reduced row-echelon form over GF(2), pivots left to right."""
    rows = list(m.rows)
    rank = 0
    for col in range(m.cols):
        pivot = None
        for i in range(rank, len(rows)):
            if (rows[i] >> col) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and (rows[i] >> col) & 1:
                rows[i] ^= rows[rank]
        rank += 1
    return BinMatrix(tuple(rows), m.cols), rank


def rank(m: BinMatrix) -> int:
    """Rank over GF(2)."""
    return row_reduce(m)[1]


def kernel(m: BinMatrix) -> BinMatrix:
    """Rows span {v : m @ v = 0 over GF(2)}; row count = cols - rank(m)."""
    red, rk = row_reduce(m)
    pivots = []
    i = 0
    for col in range(m.cols):
        if i < rk and (red.rows[i] >> col) & 1:
            pivots.append(col)
            i += 1
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = 1 << f
        # back-substitute: pivot variable of row i is set iff row i has a 1 in column f
        for i, p in enumerate(pivots):
            if (red.rows[i] >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return BinMatrix(tuple(basis), m.cols)
