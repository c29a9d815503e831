"""Lift a degree matrix to tailbiting and circulant parity-check layouts.

Tailbiting layout: block row r, block column t holds the base pattern of all
edges with (r - t) mod M equal to their degree; equivalently each edge (i, j)
with degree w puts a one at (((t + w) mod M) * (c-b) + i, t*c + j) for every
block column t.  Circulant layout groups by base position instead: block
(i, j) is the M x M circulant with ones at (s, (s - w) mod M).  The two are
column/row permutations of each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .matrices import (
    CIRCULANT,
    NO_EDGE,
    TAILBITING,
    DegreeMatrix,
    QCBlock,
    SparseParityCheck,
    gf2_rank,
)


def _edge_arrays(w: DegreeMatrix) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    ei, ej = np.nonzero(w.entries != NO_EDGE)
    return ei, ej, w.entries[ei, ej]


def _rows_from_coords(row_idx: np.ndarray, col_idx: np.ndarray, n_rows: int,
                      n_cols: int, layout: str, block: QCBlock) -> SparseParityCheck:
    order = np.lexsort((col_idx, row_idx))
    row_idx = row_idx[order]
    col_idx = col_idx[order]
    counts = np.bincount(row_idx, minlength=n_rows)
    rows = []
    pos = 0
    for r in range(n_rows):
        rows.append(tuple(col_idx[pos: pos + counts[r]].tolist()))
        pos += counts[r]
    return SparseParityCheck(n_rows, n_cols, tuple(rows), layout, block)


def lift_tailbiting(w: DegreeMatrix, m: int) -> SparseParityCheck:
    """Tailbiting parity-check matrix of size M(c-b) x Mc."""
    if m <= w.max_degree:
        raise ValueError(f"tailbiting length {m} must exceed max degree {w.max_degree}")
    cb, c = w.n_rows, w.n_cols
    ei, ej, ew = _edge_arrays(w)
    t = np.arange(m).repeat(ei.size)
    ei_t = np.tile(ei, m)
    ej_t = np.tile(ej, m)
    ew_t = np.tile(ew, m)
    row_idx = ((t + ew_t) % m) * cb + ei_t
    col_idx = t * c + ej_t
    return _rows_from_coords(row_idx, col_idx, m * cb, m * c, TAILBITING, QCBlock(m, c, cb))


def lift_circulant(w: DegreeMatrix, m: int) -> SparseParityCheck:
    """Circulant-block parity-check matrix, equivalent to the tailbiting one."""
    if m <= w.max_degree:
        raise ValueError(f"tailbiting length {m} must exceed max degree {w.max_degree}")
    cb, c = w.n_rows, w.n_cols
    ei, ej, ew = _edge_arrays(w)
    s = np.arange(m).repeat(ei.size)
    ei_t = np.tile(ei, m)
    ej_t = np.tile(ej, m)
    ew_t = np.tile(ew, m)
    row_idx = ei_t * m + s
    col_idx = ej_t * m + (s - ew_t) % m
    return _rows_from_coords(row_idx, col_idx, m * cb, m * c, CIRCULANT, QCBlock(m, c, cb))


def reorder_to_circulant(h_tb: SparseParityCheck, c: int, cb: int, m: int,
                         ) -> tuple[SparseParityCheck, np.ndarray, np.ndarray]:
    """Permute a tailbiting matrix into circulant layout.

    Returns (matrix, column permutation, row permutation) where position p of
    a permutation holds the source index: column p of the result is column
    ``col_perm[p]`` of the input.  Columns are gathered as 0, c, 2c, ... then
    1, c+1, ... and rows analogously with stride c-b.
    """
    if h_tb.n_rows != m * cb or h_tb.n_cols != m * c:
        raise ValueError("dimensions do not match (c, c-b, M)")
    col_perm = np.array([t * c + j for j in range(c) for t in range(m)], dtype=np.int64)
    row_perm = np.array([s * cb + i for i in range(cb) for s in range(m)], dtype=np.int64)
    col_rank = np.empty_like(col_perm)
    col_rank[col_perm] = np.arange(col_perm.size)
    rows = []
    for r in row_perm:
        rows.append(tuple(sorted(int(col_rank[c0]) for c0 in h_tb.rows[r])))
    reordered = SparseParityCheck(h_tb.n_rows, h_tb.n_cols, tuple(rows),
                                  CIRCULANT, QCBlock(m, c, cb))
    return reordered, col_perm, row_perm


@dataclass(frozen=True)
class TailbitingCode:
    """A degree matrix wrapped to tailbiting length M."""

    degree: DegreeMatrix
    m: int

    def __post_init__(self) -> None:
        if self.m <= self.degree.max_degree:
            raise ValueError("M must exceed the maximum degree")

    @property
    def n(self) -> int:
        return self.m * self.degree.n_cols

    @cached_property
    def h_tb(self) -> SparseParityCheck:
        return lift_tailbiting(self.degree, self.m)

    @cached_property
    def h_c(self) -> SparseParityCheck:
        return lift_circulant(self.degree, self.m)

    @cached_property
    def k(self) -> int:
        return self.n - gf2_rank(self.h_tb)
