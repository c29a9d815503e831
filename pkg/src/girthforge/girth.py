"""Girth machinery: path trees, voltage inequalities, assignment checkers,
and an independent BFS girth oracle.

A target girth g is certified on a lifted graph iff no non-backtracking
closed walk of length < g in the base graph has voltage 0 (mod M).  All such
walks are enumerated as node pairs inside c symbol-rooted trees of depth
g/2 - 1: a pair with equal label and depth but different parents closes a
walk whose voltage is the difference of the two path voltages.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .matrices import BaseMatrix, DegreeMatrix, SparseParityCheck, NO_EDGE


@dataclass(frozen=True)
class BaseGraphView:
    """Edge-indexed adjacency of a base matrix's bipartite graph."""

    base: BaseMatrix
    edges: tuple[tuple[int, int], ...]          # edge id -> (row, col)
    sym_adj: tuple[tuple[tuple[int, int], ...], ...]   # col -> ((edge, row), ...)
    con_adj: tuple[tuple[tuple[int, int], ...], ...]   # row -> ((edge, col), ...)

    @classmethod
    def from_base(cls, base: BaseMatrix) -> "BaseGraphView":
        edges = tuple(base.edges())
        sym: list[list[tuple[int, int]]] = [[] for _ in range(base.n_cols)]
        con: list[list[tuple[int, int]]] = [[] for _ in range(base.n_rows)]
        for e, (i, j) in enumerate(edges):
            sym[j].append((e, i))
            con[i].append((e, j))
        return cls(base, edges, tuple(map(tuple, sym)), tuple(map(tuple, con)))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def adjacency_arrays(self, odd_depth: bool):
        """(edge-id array, neighbor array) per vertex label on one side."""
        adj = self.sym_adj if odd_depth else self.con_adj
        return [(np.array([e for e, _ in entries], dtype=np.int32),
                 np.array([o for _, o in entries], dtype=np.int32))
                for entries in adj]


@dataclass
class PathTree:
    """All non-backtracking paths from one symbol node, up to a depth cap.

    Nodes are stored level by level in creation order; ``voltages[n]`` is the
    symbolic path voltage of node n as integer coefficients per base edge
    (constraint-to-symbol traversal counts +1, the reverse -1).
    """

    root: int
    number: np.ndarray
    depth: np.ndarray
    parent: np.ndarray
    edge: np.ndarray
    voltages: np.ndarray
    levels: tuple[tuple[int, int], ...]
    keep: np.ndarray | None = None

    @property
    def n_nodes(self) -> int:
        return self.number.size

    def level_nodes(self, d: int) -> np.ndarray:
        if d >= len(self.levels):
            return np.arange(0)
        lo, hi = self.levels[d]
        return np.arange(lo, hi)

    def kept_count(self) -> int:
        return int(self.keep.sum()) if self.keep is not None else self.n_nodes


def _grow_tree(graph: BaseGraphView, root: int, max_depth: int,
               adjacency=None) -> PathTree:
    n_edges = graph.n_edges
    if adjacency is None:
        adjacency = (graph.adjacency_arrays(False), graph.adjacency_arrays(True))
    numbers = [np.array([root], dtype=np.int32)]
    edges = [np.array([-1], dtype=np.int32)]
    parents = [np.array([-1], dtype=np.int32)]
    volts = [np.zeros((1, n_edges), dtype=np.int8)]
    levels = [(0, 1)]

    start = 0
    for d in range(1, max_depth + 1):
        sign = -1 if d % 2 == 1 else 1  # odd depth: symbol -> constraint
        adj = adjacency[d % 2]
        prev_num, prev_edge = numbers[-1], edges[-1]
        prev_global = np.arange(start, start + prev_num.size)
        blk_parent, blk_edge, blk_other = [], [], []
        for label in np.unique(prev_num):
            sel = np.nonzero(prev_num == label)[0]
            adj_e, adj_o = adj[label]
            deg = adj_e.size
            if deg == 0:
                continue
            par = np.repeat(prev_global[sel], deg)
            ch_e = np.tile(adj_e, sel.size)
            ch_o = np.tile(adj_o, sel.size)
            keep = ch_e != np.repeat(prev_edge[sel], deg)
            blk_parent.append(par[keep])
            blk_edge.append(ch_e[keep])
            blk_other.append(ch_o[keep])
        if not blk_parent:
            break
        par = np.concatenate(blk_parent)
        if par.size == 0:
            break
        ch_e = np.concatenate(blk_edge)
        ch_o = np.concatenate(blk_other)
        v = volts[-1][par - start].copy()
        v[np.arange(par.size), ch_e] += sign
        numbers.append(ch_o.astype(np.int32))
        edges.append(ch_e.astype(np.int32))
        parents.append(par.astype(np.int32))
        volts.append(v)
        new_start = start + prev_num.size
        levels.append((new_start, new_start + par.size))
        start = new_start

    depth_arr = np.concatenate([np.full(n.size, i, dtype=np.int16)
                                for i, n in enumerate(numbers)])
    return PathTree(
        root=root,
        number=np.concatenate(numbers),
        depth=depth_arr,
        parent=np.concatenate(parents),
        edge=np.concatenate(edges),
        voltages=np.vstack(volts),
        levels=tuple(levels),
    )


def grow_trees(b: BaseMatrix, g: int) -> list[PathTree]:
    """Grow one tree of depth g/2 - 1 per symbol node of the base graph."""
    if g % 2 != 0 or g < 4:
        raise ValueError("target girth must be even and at least 4")
    graph = BaseGraphView.from_base(b)
    adjacency = (graph.adjacency_arrays(False), graph.adjacency_arrays(True))
    return [_grow_tree(graph, j, g // 2 - 1, adjacency) for j in range(b.n_cols)]


@dataclass(frozen=True)
class VoltageInequality:
    """Canonical `sum(coeff * voltage) != 0` constraint over base edges.

    Coefficients are sign-normalized so the first nonzero one is positive.
    ``witness`` records the first node pair that produced the constraint, as
    (tree index, node u, node v).
    """

    coeffs: np.ndarray
    witness: tuple[int, int, int]

    def terms(self) -> list[tuple[int, int]]:
        nz = np.nonzero(self.coeffs)[0]
        return [(int(e), int(self.coeffs[e])) for e in nz]


def _canonical_rows(diffs: np.ndarray) -> np.ndarray:
    """Sign-normalize rows in place so the first nonzero entry is positive."""
    nz = diffs != 0
    has = nz.any(axis=1)
    first = np.argmax(nz, axis=1)
    lead = diffs[np.arange(diffs.shape[0]), first]
    flip = has & (lead < 0)
    diffs[flip] *= -1
    return diffs


def _dfs_rank(tree: PathTree) -> np.ndarray:
    """Preorder index of every node (children visited in creation order)."""
    children: list[list[int]] = [[] for _ in range(tree.n_nodes)]
    for n in range(1, tree.n_nodes):
        children[tree.parent[n]].append(n)
    rank = np.empty(tree.n_nodes, dtype=np.int64)
    stack = [0]
    t = 0
    while stack:
        n = stack.pop()
        rank[n] = t
        t += 1
        stack.extend(reversed(children[n]))
    return rank


def _candidate_pairs(tree: PathTree) -> tuple[np.ndarray, np.ndarray]:
    """All qualifying node pairs of one tree (same depth and label), ordered
    as a double loop over the preorder node array would visit them.

    Two children of one node always carry different labels, so any same-level
    same-label pair automatically has distinct parents.  The ordering fixes
    which pair first witnesses each inequality and thereby the reduced-tree
    node counts.
    """
    pairs_u: list[np.ndarray] = []
    pairs_v: list[np.ndarray] = []
    for d in range(2, len(tree.levels)):
        lo, hi = tree.levels[d]
        numbers = tree.number[lo:hi]
        for label in np.unique(numbers):
            idx = lo + np.nonzero(numbers == label)[0]
            if idx.size < 2:
                continue
            a, b = np.triu_indices(idx.size, 1)
            pairs_u.append(idx[a])
            pairs_v.append(idx[b])
    if not pairs_u:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty
    u = np.concatenate(pairs_u)
    v = np.concatenate(pairs_v)
    rank = _dfs_rank(tree)
    ru, rv = rank[u], rank[v]
    swap = ru > rv
    u, v = np.where(swap, v, u), np.where(swap, u, v)
    # pairs are distinct, so the combined key needs no stable sort
    order = np.argsort(rank[u] * np.int64(tree.n_nodes) + rank[v])
    return u[order], v[order]


def _tree_unique_inequalities(tree: PathTree):
    """Per-tree canonical inequality rows with their first witness pair,
    kept in pair-enumeration order."""
    u_nodes, v_nodes = _candidate_pairs(tree)
    if u_nodes.size == 0:
        return None
    # coefficients are bounded by the tree depth, so int8 cannot overflow
    diffs = tree.voltages[u_nodes] - tree.voltages[v_nodes]
    diffs = _canonical_rows(diffs)
    diffs = np.ascontiguousarray(diffs, dtype=np.int8)
    keys = diffs.view(np.dtype((np.void, diffs.shape[1])))[:, 0]
    _, first_idx = np.unique(keys, return_index=True)
    order = np.sort(first_idx)
    return diffs[order], u_nodes[order], v_nodes[order]


def collect_inequalities(trees: Sequence[PathTree]) -> list[VoltageInequality]:
    """Unique voltage inequalities over all trees, first witness recorded."""
    blocks = []
    for t_idx, tree in enumerate(trees):
        per_tree = _tree_unique_inequalities(tree)
        if per_tree is not None:
            blocks.append((t_idx, *per_tree))
    if not blocks:
        return []
    diffs_all = np.vstack([b[1] for b in blocks])
    u_all = np.concatenate([b[2] for b in blocks])
    v_all = np.concatenate([b[3] for b in blocks])
    t_all = np.concatenate([np.full(b[2].size, b[0], dtype=np.int32) for b in blocks])
    keys = diffs_all.view(np.dtype((np.void, diffs_all.shape[1])))[:, 0]
    _, first_idx = np.unique(keys, return_index=True)
    order = np.sort(first_idx)  # global first occurrences in enumeration order
    coeff_rows = diffs_all[order]
    return [
        VoltageInequality(coeffs=coeff_rows[i],
                          witness=(int(t_all[fi]), int(u_all[fi]), int(v_all[fi])))
        for i, fi in enumerate(order)
    ]


def reduce_trees(trees: Sequence[PathTree],
                 ineqs: Sequence[VoltageInequality]) -> list[PathTree]:
    """Keep only nodes on the witness paths of the unique inequalities."""
    keeps = [np.zeros(t.n_nodes, dtype=bool) for t in trees]
    for iq in ineqs:
        t_idx, u, v = iq.witness
        keep = keeps[t_idx]
        parent = trees[t_idx].parent
        for node in (u, v):
            while node >= 0 and not keep[node]:
                keep[node] = True
                node = parent[node]
    return [
        PathTree(t.root, t.number, t.depth, t.parent, t.edge, t.voltages,
                 t.levels, keep=k)
        for t, k in zip(trees, keeps)
    ]


def tree_node_count(trees_min: Sequence[PathTree]) -> int:
    return sum(t.kept_count() for t in trees_min)


def complexity_counts(b: BaseMatrix, g: int) -> tuple[int, int]:
    """(N_T, N_L): total reduced-tree nodes and unique inequality count."""
    trees = grow_trees(b, g)
    ineqs = collect_inequalities(trees)
    trees_min = reduce_trees(trees, ineqs)
    return tree_node_count(trees_min), len(ineqs)


def node_pair_count(trees: Sequence[PathTree]) -> int:
    """Number of qualifying node pairs before deduplication."""
    return sum(_candidate_pairs(tree)[0].size for tree in trees)


# ---------------------------------------------------------------------------
# Assignment checking
# ---------------------------------------------------------------------------

def inequality_matrix(ineqs: Sequence[VoltageInequality]) -> np.ndarray:
    """Stack inequality coefficients into an (N_L, n_edges) int64 matrix."""
    if not ineqs:
        return np.zeros((0, 0), dtype=np.int64)
    return np.stack([iq.coeffs for iq in ineqs]).astype(np.int64)


def check_assignment_list(trees_min: Sequence[PathTree],
                          ineqs: Sequence[VoltageInequality],
                          assignment: np.ndarray,
                          modulus: int | None = None) -> bool:
    """True iff every collected inequality evaluates nonzero (mod M)."""
    del trees_min  # the reduced trees back the sorted variant only
    if not ineqs:
        return True
    values = inequality_matrix(ineqs) @ np.asarray(assignment, dtype=np.int64)
    if modulus is not None:
        values %= modulus
    return bool((values != 0).all())


def _numeric_voltages(tree: PathTree, assignment: np.ndarray,
                      modulus: int | None) -> np.ndarray:
    values = np.zeros(tree.n_nodes, dtype=np.int64)
    for d in range(1, len(tree.levels)):
        lo, hi = tree.levels[d]
        sign = -1 if d % 2 == 1 else 1
        values[lo:hi] = values[tree.parent[lo:hi]] + sign * assignment[tree.edge[lo:hi]]
        if modulus is not None:
            values[lo:hi] %= modulus
    return values


def check_assignment_sorted(trees_min: Sequence[PathTree],
                            assignment: np.ndarray,
                            modulus: int | None = None) -> bool:
    """Sorted-tree variant: reject iff some reduced tree contains two nodes
    of equal depth, label, and path voltage (distinct parents are implied)."""
    assignment = np.asarray(assignment, dtype=np.int64)
    for tree in trees_min:
        values = _numeric_voltages(tree, assignment, modulus)
        mask = tree.keep if tree.keep is not None else np.ones(tree.n_nodes, bool)
        mask = mask & (tree.depth >= 2)
        if not mask.any():
            continue
        dep = tree.depth[mask]
        num = tree.number[mask]
        val = values[mask]
        order = np.lexsort((val, num, dep))
        dep, num, val = dep[order], num[order], val[order]
        dup = (dep[1:] == dep[:-1]) & (num[1:] == num[:-1]) & (val[1:] == val[:-1])
        if dup.any():
            return False
    return True


class GirthSystem:
    """Trees + inequalities for one (base, target girth) pair, reused across
    many assignment checks."""

    def __init__(self, base: BaseMatrix, g: int):
        self.base = base
        self.g = g
        self.graph = BaseGraphView.from_base(base)
        self.trees = grow_trees(base, g)
        self.ineqs = collect_inequalities(self.trees)
        self.trees_min = reduce_trees(self.trees, self.ineqs)
        self._matrix = inequality_matrix(self.ineqs)

    @property
    def n_edges(self) -> int:
        return self.graph.n_edges

    def check(self, assignment: np.ndarray, modulus: int | None = None,
              sorted_variant: bool | None = None) -> bool:
        """Check one assignment; picks the list variant for g <= 10 and the
        sorted variant for larger girth unless overridden."""
        if sorted_variant is None:
            sorted_variant = self.g >= 12
        if sorted_variant:
            return check_assignment_sorted(self.trees_min, assignment, modulus)
        return check_assignment_list(self.trees_min, self.ineqs, assignment, modulus)

    def check_batch(self, assignments: np.ndarray, modulus: int) -> np.ndarray:
        """Vectorized list check of a (batch, n_edges) block of assignments."""
        if self._matrix.size == 0:
            return np.ones(assignments.shape[0], dtype=bool)
        values = assignments.astype(np.int64) @ self._matrix.T
        values %= modulus
        return (values != 0).all(axis=1)

    def inequality_values(self, assignment: np.ndarray) -> np.ndarray:
        """Integer inequality values for one assignment (no modulus)."""
        if self._matrix.size == 0:
            return np.zeros(0, dtype=np.int64)
        return self._matrix @ np.asarray(assignment, dtype=np.int64)


# ---------------------------------------------------------------------------
# Free girth (integer voltages)
# ---------------------------------------------------------------------------

def free_girth(w: DegreeMatrix, cap: int) -> int | None:
    """Length of the shortest zero-voltage closed walk over the integers,
    i.e. the girth of the unwrapped (infinite) lifted graph; None above cap.

    Trees grow level by level and stop at the first depth with a duplicate
    (label, path voltage) node pair, so bases capped by an all-ones submatrix
    stay cheap even for large caps.
    """
    if cap % 2 != 0 or cap < 4:
        raise ValueError("cap must be even and at least 4")
    base = w.base()
    graph = BaseGraphView.from_base(base)
    assignment = w.entries[w.entries != NO_EDGE].astype(np.int64)

    trees = [_seed_numeric_tree(j) for j in range(base.n_cols)]
    for d in range(1, cap // 2 + 1):
        found = False
        for tree in trees:
            if _extend_numeric_level(tree, graph, assignment, d):
                found = True
        if not found:
            return None
        for tree in trees:
            if _level_has_duplicate(tree, d):
                return 2 * d
    return None


def _seed_numeric_tree(root: int) -> dict:
    return {
        "number": [np.array([root], dtype=np.int32)],
        "edge": [np.array([-1], dtype=np.int32)],
        "value": [np.array([0], dtype=np.int64)],
    }


def _extend_numeric_level(tree: dict, graph: BaseGraphView,
                          assignment: np.ndarray, d: int) -> bool:
    numbers = tree["number"][d - 1]
    edges = tree["edge"][d - 1]
    values = tree["value"][d - 1]
    sign = -1 if d % 2 == 1 else 1
    adj = graph.sym_adj if d % 2 == 1 else graph.con_adj
    new_num: list[int] = []
    new_edge: list[int] = []
    new_val: list[int] = []
    for n, pe, val in zip(numbers.tolist(), edges.tolist(), values.tolist()):
        for e, other in adj[n]:
            if e == pe:
                continue
            new_num.append(other)
            new_edge.append(e)
            new_val.append(val + sign * int(assignment[e]))
    tree["number"].append(np.asarray(new_num, dtype=np.int32))
    tree["edge"].append(np.asarray(new_edge, dtype=np.int32))
    tree["value"].append(np.asarray(new_val, dtype=np.int64))
    return bool(new_num)


def _level_has_duplicate(tree: dict, d: int) -> bool:
    numbers = tree["number"][d]
    values = tree["value"][d]
    if numbers.size < 2:
        return False
    order = np.lexsort((values, numbers))
    num, val = numbers[order], values[order]
    return bool(((num[1:] == num[:-1]) & (val[1:] == val[:-1])).any())


# ---------------------------------------------------------------------------
# BFS girth oracle on an explicit sparse matrix (independent certification)
# ---------------------------------------------------------------------------

def girth_bfs_oracle(h: SparseParityCheck, cap: int = 32,
                     start_vertices: Sequence[int] | None = None) -> int | None:
    """Exact girth of the Tanner graph of h via breadth-first shortest-cycle
    search; None if no cycle of length <= cap exists.

    Vertices 0..n_rows-1 are constraints, the rest symbols.  By default every
    vertex is a BFS start, which is exact for any graph; for lifted matrices
    one start per block orbit suffices (see :func:`qc_start_vertices`).
    """
    n_v = h.n_rows + h.n_cols
    adj: list[list[int]] = [[] for _ in range(n_v)]
    for r, cols in enumerate(h.rows):
        for c in cols:
            adj[r].append(h.n_rows + c)
            adj[h.n_rows + c].append(r)

    starts = range(n_v) if start_vertices is None else start_vertices
    dist = np.full(n_v, -1, dtype=np.int32)
    parent = np.full(n_v, -1, dtype=np.int32)
    best = cap + 2

    for s in starts:
        touched = [s]
        dist[s] = 0
        frontier = [s]
        level = 0
        while frontier and 2 * level < best:
            nxt: list[int] = []
            for u in frontier:
                du = int(dist[u])
                pu = parent[u]
                for x in adj[u]:
                    if x == pu:
                        continue
                    dx = dist[x]
                    if dx < 0:
                        dist[x] = du + 1
                        parent[x] = u
                        nxt.append(x)
                        touched.append(x)
                    else:
                        cand = du + int(dx) + 1
                        if cand < best:
                            best = cand
            frontier = nxt
            level += 1
        dist[touched] = -1
        parent[touched] = -1

    if best > cap:
        return None
    if best % 2 != 0:
        raise AssertionError("odd cycle reported on a bipartite graph")
    return best


def qc_start_vertices(h: SparseParityCheck) -> list[int]:
    """One BFS start per cyclic-shift orbit of a lifted matrix."""
    if h.block is None:
        raise ValueError("matrix carries no block metadata")
    m, c, cb = h.block.m, h.block.c, h.block.cb
    if h.layout == "tailbiting":
        rows = list(range(cb))                   # block column t = 0
        cols = list(range(c))
    elif h.layout == "circulant":
        rows = [i * m for i in range(cb)]        # shift s = 0 in each block
        cols = [j * m for j in range(c)]
    else:
        raise ValueError("start vertices need tailbiting or circulant layout")
    return rows + [h.n_rows + col for col in cols]


def certified_girth(h: SparseParityCheck, cap: int = 32) -> int | None:
    """Girth via the BFS oracle, using orbit starts when metadata allows."""
    starts = None
    if h.block is not None and h.layout in ("tailbiting", "circulant"):
        starts = qc_start_vertices(h)
    return girth_bfs_oracle(h, cap=cap, start_vertices=starts)
