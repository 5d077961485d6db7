"""Cyclic Chinese Postman walks on bi-directed graphs.

Pipeline: find the imbalanced vertices, price a terminal-oriented shortest
walk from every positive to every negative vertex, match replicas of them
in a balancing bipartite graph, overlay the matched walks so every vertex
is balanced, then read off a cyclic Euler tour.

When no perfect matching exists, unmatched replicas are tied to a
hypothetical vertex ``h``; the Euler tour of that augmented graph, cut at
``h``, yields a set of contigs covering every edge.
"""

from __future__ import annotations

import enum
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .bigraph import (BiEdge, BiGraph, BiWalk, DisconnectedGraphError, IN, OUT, Spin,
                      components, imbalance_sets, ImbalanceSets)
from .matching import Matching, greedy_match, hungarian_min_perfect, max_match_min_cost
from .shortest import INF, terminal_labels_many

logger = logging.getLogger(__name__)


class SolutionKind(enum.Enum):
    CYCLIC_CP_WALK = "CYCLIC_CP_WALK"
    CONTIG_SET = "CONTIG_SET"


class _Hypothetical:
    """The extra vertex that absorbs unmatched replicas in contig mode."""

    def __repr__(self):
        return "<h>"

    __str__ = __repr__


HYPOTHETICAL = _Hypothetical()


@dataclass
class MultiBiGraph:
    """A base graph plus extra copies of some of its edges (same orientation)."""
    base: BiGraph
    overlay: Counter = field(default_factory=Counter)

    def multiplicity(self, eid: int) -> int:
        return self.base.edges[eid].multiplicity + self.overlay[eid]

    def counts(self) -> list[int]:
        return [self.multiplicity(i) for i in range(len(self.base.edges))]

    def overlay_walk(self, w: BiWalk) -> None:
        for eid, _ in w.steps:
            self.overlay[eid] += 1

    def weight(self) -> float:
        return sum(e.weight * self.multiplicity(i) for i, e in enumerate(self.base.edges))

    def imbalance_sets(self) -> ImbalanceSets:
        return imbalance_sets(self.base, self.counts())

    def is_balanced(self) -> bool:
        counts = self.counts()
        return all(self.base.imbalance(v, counts) == 0 for v in self.base.vertices)


@dataclass
class BalancingBipartite:
    graph: BiGraph
    imbalance: ImbalanceSets
    P: list[tuple]          # (vertex, replica number starting at 1)
    Q: list[tuple]
    dist: dict              # (p, q) vertex pair -> terminal walk cost (inf if none)
    walks: dict             # (p, q) -> stored shortest terminal walk

    def cost_matrix(self) -> np.ndarray:
        c = np.full((len(self.P), len(self.Q)), INF)
        for i, (p, _) in enumerate(self.P):
            for j, (q, _) in enumerate(self.Q):
                c[i, j] = self.dist[p, q]
        return c

    @property
    def p(self) -> int:
        return max(len(self.P), len(self.Q))

    def pair_walk(self, i: int, j: int) -> BiWalk:
        return self.walks[self.P[i][0], self.Q[j][0]]


@dataclass
class CppSolution:
    kind: SolutionKind
    walk: BiWalk | None = None
    contigs: list[BiWalk] = field(default_factory=list)
    base_cost: float = 0.0
    matching_cost: float = 0.0
    matching: Matching | None = None

    @property
    def cost(self) -> float:
        return self.base_cost + self.matching_cost

    def walks(self) -> list[BiWalk]:
        return [self.walk] if self.kind is SolutionKind.CYCLIC_CP_WALK else list(self.contigs)


def is_eulerian(g: BiGraph) -> bool:
    """Connected and balanced everywhere (a single vertex counts as Eulerian)."""
    if len(g.vertices) > 1 and len(components(g)) > 1:
        return False
    return all(g.imbalance(v) == 0 for v in g.vertices)


def build_balancing_bipartite(g: BiGraph, threads: int = 1) -> BalancingBipartite:
    imb = imbalance_sets(g)
    P = [(v, i) for v in imb.vplus for i in range(1, imb.excess[v] + 1)]
    Q = [(v, i) for v in imb.vminus for i in range(1, imb.excess[v] + 1)]
    dist, walks = {}, {}
    if imb.vplus and imb.vminus:
        runs = terminal_labels_many(g, imb.vplus, threads)
        for p in imb.vplus:
            labels = runs[p]
            for q in imb.vminus:
                d = labels.distance(q)
                dist[p, q] = d
                if d < INF:
                    walks[p, q] = labels.walk_to(q)
    return BalancingBipartite(g, imb, P, Q, dist, walks)


def overlay_matching(b: BalancingBipartite, m: Matching) -> MultiBiGraph:
    mg = MultiBiGraph(b.graph)
    for i, j in m.pairs:
        mg.overlay_walk(b.pair_walk(i, j))
    return mg


def _euler_tours(g: BiGraph, counts: Sequence[int], prefer_start=None) -> list[BiWalk]:
    """One cyclic Euler tour per undirected component that has edges.

    Spin-constrained Hierholzer: after arriving through a spin, leave
    through an unused incidence of the opposite spin; lowest edge id first.
    Assumes every vertex is balanced under ``counts``.
    """
    n = len(g.vertices)
    # free[i][spin]: stack of (copy id, end), lowest eid on top
    free = [([], []) for _ in range(n)]
    copy_edge: list[int] = []
    for eid in range(len(g.edges) - 1, -1, -1):
        e = g.edges[eid]
        for _ in range(counts[eid]):
            cid = len(copy_edge)
            copy_edge.append(eid)
            for end in (1, 0):
                free[g.index[e.end_vertex(end)]][e.end_spin(end)].append((cid, end))
    for i in range(n):
        for s in (IN, OUT):
            # copies were appended in descending eid order, so the top is the lowest eid
            free[i][s].sort(key=lambda ce: (-copy_edge[ce[0]], -ce[0], -ce[1]))
    used = [False] * len(copy_edge)

    def take(i: int, s: Spin):
        stack = free[i][s]
        while stack:
            cid, end = stack.pop()
            if not used[cid]:
                used[cid] = True
                return cid, end
        return None

    def has_free(i: int) -> Spin | None:
        for s in (OUT, IN):
            stack = free[i][s]
            while stack and used[stack[-1][0]]:
                stack.pop()
            if stack:
                return s
        return None

    order = list(range(n))
    if prefer_start is not None and prefer_start in g.index:
        first = g.index[prefer_start]
        order.remove(first)
        order.insert(0, first)

    tours = []
    for si in order:
        s0 = has_free(si)
        if s0 is None:
            continue
        # stack entries: (vertex index, spin needed to leave, step that arrived here)
        stack = [(si, s0, None)]
        circuit = []
        while stack:
            i, need, step = stack[-1]
            got = take(i, need)
            if got is None:
                stack.pop()
                if step is not None:
                    circuit.append(step)
                continue
            cid, end = got
            eid = copy_edge[cid]
            e = g.edges[eid]
            far = 1 - end
            stack.append((g.index[e.end_vertex(far)], e.end_spin(far).opposite(), (eid, end == 0)))
        circuit.reverse()
        tours.append(BiWalk(g.vertices[si], tuple(circuit), cyclic=True))
    return tours


def euler_tour(mg: MultiBiGraph | BiGraph) -> BiWalk:
    """Cyclic Euler tour using each edge exactly its multiplicity times."""
    if isinstance(mg, BiGraph):
        mg = MultiBiGraph(mg)
    g = mg.base
    counts = mg.counts()
    bad = [v for v in g.vertices if g.imbalance(v, counts) != 0]
    if bad:
        raise ValueError(f"euler_tour needs balanced vertices; imbalanced: {bad[:10]}")
    comps = components(g)
    if len(comps) > 1:
        raise DisconnectedGraphError(comps)
    tours = _euler_tours(g, counts)
    if not tours:
        return BiWalk(g.vertices[0] if g.vertices else None, (), cyclic=True)
    return tours[0]


def _require_connected(g: BiGraph) -> None:
    if len(g.vertices) > 1:
        comps = components(g)
        if len(comps) > 1:
            raise DisconnectedGraphError(comps)


def _cyclic_solution(mg: MultiBiGraph, matching: Matching | None, matching_cost: float) -> CppSolution:
    assert mg.is_balanced(), "overlay left an imbalanced vertex"
    tour = euler_tour(mg)
    return CppSolution(SolutionKind.CYCLIC_CP_WALK, walk=tour,
                       base_cost=mg.base.total_weight(), matching_cost=matching_cost,
                       matching=matching)


def solve_cpp_exact(g: BiGraph, threads: int = 1) -> CppSolution | None:
    """Optimal cyclic Chinese Postman walk, or None when none exists.

    Raises :class:`DisconnectedGraphError` for disconnected input.
    """
    _require_connected(g)
    if is_eulerian(g):
        return _cyclic_solution(MultiBiGraph(g), None, 0.0)
    b = build_balancing_bipartite(g, threads)
    m = hungarian_min_perfect(b.cost_matrix())
    if m is None:
        return None
    return _cyclic_solution(overlay_matching(b, m), m, m.total_cost)


def solve_cpp_greedy(g: BiGraph, threads: int = 1) -> CppSolution:
    """Same pipeline with greedy matching; an imperfect greedy matching yields contigs."""
    _require_connected(g)
    if is_eulerian(g):
        return _cyclic_solution(MultiBiGraph(g), None, 0.0)
    b = build_balancing_bipartite(g, threads)
    m = greedy_match(b.cost_matrix())
    if m.size == len(b.P) == len(b.Q):
        return _cyclic_solution(overlay_matching(b, m), m, m.total_cost)
    return extract_contigs(g, m, b)


def extract_contigs(g: BiGraph, m: Matching, b: BalancingBipartite) -> CppSolution:
    """Contigs from a possibly imperfect matching.

    Matched walks are overlaid as usual. Each unmatched P replica ``p`` gets
    an edge ``p -> h`` (OUT at p, IN at h) and each unmatched Q replica ``q``
    an edge ``h -> q`` (OUT at h, IN at q). If those counts differ, loops
    at ``h`` make up the (always even) difference. Every component of the
    augmented graph is Euler-toured; tours through ``h`` are cut there.
    """
    mg = overlay_matching(b, m)
    counts = mg.counts()
    matched_p = {i for i, _ in m.pairs}
    matched_q = {j for _, j in m.pairs}
    free_p = [b.P[i][0] for i in range(len(b.P)) if i not in matched_p]
    free_q = [b.Q[j][0] for j in range(len(b.Q)) if j not in matched_q]

    h = HYPOTHETICAL
    extra = [BiEdge(p, h, ">", ">", 0.0) for p in free_p]
    extra += [BiEdge(h, q, ">", ">", 0.0) for q in free_q]
    diff = len(free_p) - len(free_q)
    assert diff % 2 == 0
    loop = BiEdge(h, h, ">", "<", 0.0) if diff > 0 else BiEdge(h, h, "<", ">", 0.0)
    extra += [loop] * (abs(diff) // 2)

    aug = BiGraph(list(g.edges) + extra, g.vertices)
    n_base = len(g.edges)
    assert aug.edges[:n_base] == g.edges
    aug_counts = list(counts) + [e.multiplicity for e in aug.edges[n_base:]]
    for v in aug.vertices:
        assert aug.imbalance(v, aug_counts) == 0, f"vertex {v!r} left imbalanced"

    contigs: list[BiWalk] = []
    for tour in _euler_tours(aug, aug_counts, prefer_start=h if extra else None):
        if tour.start is not h:
            contigs.append(tour)
            continue
        run: list[tuple[int, bool]] = []
        run_start = None
        for eid, fwd in tour.steps:
            e = aug.edges[eid]
            if eid >= n_base:
                if run:
                    contigs.append(BiWalk(run_start, tuple(run)))
                run = []
                run_start = e.v if fwd else e.u
                continue
            run.append((eid, fwd))
        if run:
            contigs.append(BiWalk(run_start, tuple(run)))

    return CppSolution(SolutionKind.CONTIG_SET, contigs=contigs,
                       base_cost=g.total_weight(), matching_cost=m.total_cost, matching=m)


def solve_contigs(g: BiGraph, greedy: bool = False, threads: int = 1) -> CppSolution:
    """Contig mode on any graph, connected or not (one matching over all components)."""
    b = build_balancing_bipartite(g, threads)
    c = b.cost_matrix()
    m = greedy_match(c) if greedy else max_match_min_cost(c)
    return extract_contigs(g, m, b)

