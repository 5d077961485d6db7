"""Bipartite matching on cost matrices with ``inf`` marking absent edges."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import IO

import numpy as np

logger = logging.getLogger(__name__)

INF = math.inf


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]
    total_cost: float

    @property
    def size(self) -> int:
        return len(self.pairs)

    def row_to_col(self) -> dict[int, int]:
        return dict(self.pairs)


def as_cost_matrix(cost) -> np.ndarray:
    c = np.asarray(cost, dtype=float)
    if c.size == 0:
        c = c.reshape(c.shape if c.ndim == 2 else (0, 0))
    if c.ndim != 2:
        raise ValueError(f"cost matrix must be 2-D, got shape {c.shape}")
    if np.isnan(c).any():
        raise ValueError("cost matrix contains NaN")
    if (c < 0).any():
        raise ValueError("cost matrix contains negative costs")
    return c


def _matching(c: np.ndarray, pairs) -> Matching:
    pairs = tuple(sorted(pairs))
    return Matching(pairs, float(sum(c[i, j] for i, j in pairs)))


def _hungarian(a: list[list[float]], n: int, m: int) -> list[int] | None:
    """Shortest-augmenting-path Hungarian method, O(n^2 m), rows <= cols.

    Returns ``col_of_row`` or None when some row cannot be matched through
    finite entries.
    """
    u = [0.0] * (n + 1)
    v = [0.0] * (m + 1)
    p = [0] * (m + 1)  # p[j]: row matched to column j (1-based, 0 = free)
    way = [0] * (m + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [INF] * (m + 1)
        used = [False] * (m + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            row = a[i0 - 1]
            ui0 = u[i0]
            delta = INF
            j1 = -1
            for j in range(1, m + 1):
                if not used[j]:
                    cur = row[j - 1] - ui0 - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j
            if delta == INF:
                return None
            for j in range(m + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    col_of_row = [-1] * n
    for j in range(1, m + 1):
        if p[j]:
            col_of_row[p[j] - 1] = j - 1
    return col_of_row


def hungarian_min_perfect(cost) -> Matching | None:
    """Minimum-cost perfect matching, or None if no perfect matching exists.

    A non-square matrix has no perfect matching.
    """
    c = as_cost_matrix(cost)
    n, m = c.shape
    if n != m:
        return None
    if n == 0:
        return Matching((), 0.0)
    col_of_row = _hungarian(c.tolist(), n, m)
    if col_of_row is None:
        return None
    return _matching(c, enumerate(col_of_row))


def max_match_min_cost(cost) -> Matching:
    """Maximum-cardinality matching of minimum cost among those.

    Absent edges get a sentinel cost larger than the sum of all finite
    costs, so every extra real pair outweighs any cost difference.
    """
    c = as_cost_matrix(cost)
    n, m = c.shape
    if n == 0 or m == 0:
        return Matching((), 0.0)
    finite = np.isfinite(c)
    sentinel = 1.0 + float(c[finite].sum())
    size = max(n, m)
    a = np.full((size, size), sentinel)
    a[:n, :m] = np.where(finite, c, sentinel)
    col_of_row = _hungarian(a.tolist(), size, size)
    assert col_of_row is not None
    pairs = [(i, j) for i, j in enumerate(col_of_row) if i < n and j < m and finite[i, j]]
    return _matching(c, pairs)


def greedy_match(cost) -> Matching:
    """Scan finite entries by (cost, row, col) and keep every pair whose row and column are free."""
    c = as_cost_matrix(cost)
    rows, cols = np.nonzero(np.isfinite(c))
    order = sorted(zip(c[rows, cols].tolist(), rows.tolist(), cols.tolist()))
    used_r, used_c, pairs = set(), set(), []
    for _, i, j in order:
        if i not in used_r and j not in used_c:
            used_r.add(i)
            used_c.add(j)
            pairs.append((i, j))
    return _matching(c, pairs)


def dump_tsv(cost, fh: IO[str]) -> None:
    """Write a cost matrix as TSV (``INF`` for absent edges); used for debugging."""
    c = as_cost_matrix(cost)
    for row in c:
        fh.write("\t".join("INF" if math.isinf(x) else f"{x:g}" for x in row) + "\n")
