"""Structural bounds: base-graph girth, the 2x3 all-ones girth cap, the
achievable-girth lower bound, and the factorial minimum-distance cap.
"""

from __future__ import annotations

import math

import numpy as np

from . import gf2
from .girth import girth_bfs_oracle
from .matrices import BaseMatrix, SparseParityCheck


class OverBudgetError(Exception):
    """Cycle-space dimension exceeds the enumeration budget."""


def base_girth(b: BaseMatrix, cap: int = 64) -> int | None:
    """Girth of the base graph via the BFS oracle; None if above cap."""
    h = SparseParityCheck.from_dense(b.entries)
    return girth_bfs_oracle(h, cap=cap)


def theorem3_applies(b: BaseMatrix) -> bool:
    """True iff some pair of rows shares at least three columns, i.e. the
    base contains a 2x3 all-ones submatrix after reordering.  Voltage girth
    is then capped at 12 regardless of the assignment."""
    e = b.entries.astype(np.int32)
    overlaps = e @ e.T
    np.fill_diagonal(overlaps, 0)
    return bool((overlaps >= 3).any())


def theorem2_lower_bound(b: BaseMatrix, d2: int | None = None) -> int:
    """Girth achievable by some tailbiting length and voltage assignment:
    2*max(g_B + ceil(g_B/2), d_2), at least 3*g_B."""
    g_b = base_girth(b)
    if g_b is None:
        raise ValueError("base graph is acyclic; the bound is unbounded")
    inner = g_b + math.ceil(g_b / 2)
    if d2 is not None:
        inner = max(inner, d2)
    return 2 * inner


def _cycle_space(b: BaseMatrix) -> np.ndarray:
    """Basis of the cycle space of the base graph (nullspace of the
    vertex-edge incidence matrix), one row per basis vector over edges."""
    edges = b.edges()
    n_vertices = b.n_rows + b.n_cols
    inc = np.zeros((n_vertices, len(edges)), dtype=np.uint8)
    for e, (i, j) in enumerate(edges):
        inc[i, e] = 1
        inc[b.n_rows + j, e] = 1
    return gf2.nullspace_basis(gf2.pack_rows(inc), len(edges))


def d2_bruteforce(b: BaseMatrix, budget: int) -> int | None:
    """Minimum support of a two-dimensional subcode of the cycle space.

    Enumerates all pairs of distinct nonzero cycle-space vectors, so it needs
    cycle dimension <= budget.  Returns None when the cycle space has
    dimension below two (no such subcode exists).
    """
    basis = _cycle_space(b)
    dim = basis.shape[0]
    if dim < 2:
        return None
    if dim > budget:
        raise OverBudgetError(f"cycle space dimension {dim} exceeds budget {budget}")
    basis_ints = [int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")
                  for row in basis]
    words = [0]
    for i in range(dim):  # Gray-free full enumeration, 2^dim words
        words.extend(w ^ basis_ints[i] for w in list(words))
    words = words[1:]  # drop zero
    best = None
    for i in range(len(words)):
        wi = words[i]
        for j in range(i + 1, len(words)):
            support = (wi | words[j]).bit_count()
            if best is None or support < best:
                best = support
    return best


def distance_cap(j: int, has_zero_entries: bool, c: int, b: int) -> int:
    """Upper bound on d_min of any lift: (c-b+1)! in general, (j+1)! when the
    parity-check polynomial matrix has monomial entries only."""
    if has_zero_entries:
        return math.factorial(c - b + 1)
    return math.factorial(j + 1)
