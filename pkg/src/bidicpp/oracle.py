"""Brute-force reference answers for small instances.

Nothing here reuses the incidence index, move tables or relaxation code of
the main modules: spins are re-derived from the raw orientation symbols
and every search is written out directly. Budgets keep the searches
finite; exceeding one is a caller error.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass

from .bigraph import BiGraph

INF = math.inf


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class EnumBudget:
    max_vertices: int = 8
    max_walk_edges: int = 16
    max_cpp_edges: int = 6
    max_matrix: int = 8


DEFAULT_BUDGET = EnumBudget()


def _raw_ends(g: BiGraph):
    """Per edge: [(vertex, leaves?, enters?), ...] for both ends, from the symbols."""
    out = []
    for e in g.edges:
        # '>' at the first slot points away from u; '>' at the second slot points into v
        u_away = e.o1.value == ">"
        v_into = e.o2.value == ">"
        out.append(((e.u, u_away), (e.v, not v_into), e.weight, e.multiplicity))
    return out


def _check_size(g: BiGraph, max_edges: int, budget: EnumBudget):
    if len(g.vertices) > budget.max_vertices or len(g.edges) > max_edges:
        raise BudgetExceeded(
            f"instance with {len(g.vertices)} vertices / {len(g.edges)} edges exceeds budget")


def oracle_distances(g: BiGraph, s, mode: str = "general",
                     budget: EnumBudget = DEFAULT_BUDGET) -> dict:
    """Label-correcting (Bellman-Ford style) search from ``s`` to every vertex.

    States are (vertex, did the arrival end point away from it?). In
    ``terminal`` mode the walk must have at least one edge, start by leaving
    ``s`` through an end whose arrowhead points away from ``s``, and finish
    through an end whose arrowhead points into the target.
    """
    _check_size(g, budget.max_walk_edges, budget)
    ends = _raw_ends(g)
    # a traversal: (from vertex, from-end points away, to vertex, to-end points away, weight)
    trav = []
    for a, b, w, _m in ends:
        trav.append((a[0], a[1], b[0], b[1], w))
        trav.append((b[0], b[1], a[0], a[1], w))
    # from a state the next departure end must point the other way than the arrival end did
    best: dict = {}
    if mode not in ("general", "terminal"):
        raise ValueError(mode)
    for fv, f_away, tv, t_away, w in trav:
        if fv == s and (mode == "general" or f_away):
            best[tv, t_away] = min(best.get((tv, t_away), INF), w)
    changed = True
    while changed:
        changed = False
        for (v, arr_away), d in list(best.items()):
            for fv, f_away, tv, t_away, w in trav:
                if fv == v and f_away != arr_away and d + w < best.get((tv, t_away), INF):
                    best[tv, t_away] = d + w
                    changed = True
    out = {}
    for t in g.vertices:
        if mode == "general":
            out[t] = 0.0 if t == s else min(best.get((t, True), INF), best.get((t, False), INF))
        else:
            out[t] = best.get((t, False), INF)
    return out


def oracle_shortest(g: BiGraph, s, t, mode: str = "general",
                    budget: EnumBudget = DEFAULT_BUDGET) -> float:
    """Brute-force distance from ``s`` to ``t``; see :func:`oracle_distances`."""
    if t not in g.vertices:
        raise KeyError(t)
    return oracle_distances(g, s, mode, budget)[t]


def oracle_min_perfect_match(cost, budget: EnumBudget = DEFAULT_BUDGET) -> float | None:
    """Minimum over all permutations avoiding infinite entries; None if every one is blocked."""
    rows = [list(map(float, r)) for r in cost]
    n = len(rows)
    if n > budget.max_matrix:
        raise BudgetExceeded(f"{n}x{n} matrix exceeds budget")
    if any(len(r) != n for r in rows):
        return None
    best = None
    for perm in itertools.permutations(range(n)):
        total = 0.0
        for i, j in enumerate(perm):
            total += rows[i][j]
        if total < INF and (best is None or total < best):
            best = total
    return best if n else 0.0


def oracle_cpp(g: BiGraph, budget: EnumBudget = DEFAULT_BUDGET) -> float | None:
    """Cheapest cyclic bi-directed walk covering every edge copy, or None.

    Uniform-cost search over (vertex, arrival end pointed away?, coverage)
    from a fixed starting vertex, with the cost capped at
    ``total_weight * (|E| + 1)``.
    """
    _check_size(g, budget.max_cpp_edges, budget)
    if not g.edges:
        return 0.0
    ends = _raw_ends(g)
    need = tuple(m for *_x, m in ends)
    cap = sum(w * m for *_x, w, m in ends) * (len(ends) + 1)
    trav = []
    for idx, (a, b, w, _m) in enumerate(ends):
        trav.append((idx, a[0], a[1], b[0], b[1], w))
        trav.append((idx, b[0], b[1], a[0], a[1], w))
    start = ends[0][0][0]
    best = None
    # the walk leaves `start` through an end pointing away (first_away=True) or into it
    for first_away in (True, False):
        # arriving back through an end with the opposite sense closes the cycle:
        # arrival "away" pairs with a departure "into" and vice versa
        goal_arrival = not first_away
        zero = tuple(0 for _ in need)
        heap = [(0.0, 0, start, None, zero)]
        seen = {}
        counter = itertools.count(1)
        while heap:
            d, _, v, arr_away, cov = heapq.heappop(heap)
            if d > cap or (best is not None and d >= best):
                break
            if arr_away is not None and v == start and arr_away == goal_arrival and cov == need:
                best = d
                break
            key = (v, arr_away, cov)
            if seen.get(key, INF) <= d:
                continue
            seen[key] = d
            for idx, fv, f_away, tv, t_away, w in trav:
                if fv != v:
                    continue
                if arr_away is None:
                    if f_away != first_away:
                        continue
                elif f_away == arr_away:
                    continue
                c = list(cov)
                c[idx] = min(need[idx], c[idx] + 1)
                heapq.heappush(heap, (d + w, next(counter), tv, t_away, tuple(c)))
    return best
