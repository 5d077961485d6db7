"""Single-source shortest bi-directed walks.

Each vertex carries two labels. ``dist_plus[v]`` is the cost of the best
walk that arrives at ``v`` through an IN incidence, so it may continue
only through an OUT incidence; ``dist_minus[v]`` is the mirror case. The
search is Dijkstra's algorithm on this doubled state space, where a state
``(v, PLUS)`` relaxes the OUT incidences of ``v`` and ``(v, MINUS)`` the
IN incidences.

Terminal-oriented walks leave the source through an OUT incidence and
reach the target through an IN incidence, i.e. they end in state
``(t, PLUS)``.
"""

from __future__ import annotations

import enum
import heapq
import math
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .bigraph import BiGraph, BiWalk, IN, OUT, Spin, Vertex

INF = math.inf


class Sign(enum.IntEnum):
    PLUS = 0   # next departure uses an OUT incidence
    MINUS = 1  # next departure uses an IN incidence

    @property
    def departure(self) -> Spin:
        return OUT if self is Sign.PLUS else IN

    @staticmethod
    def after_arrival(spin: Spin) -> "Sign":
        return Sign.PLUS if spin is IN else Sign.MINUS


PLUS, MINUS = Sign.PLUS, Sign.MINUS

GENERAL = "general"
TERMINAL = "terminal"

_VIRTUAL = -1  # parent marker for the first edge of a terminal walk


@dataclass
class DistLabels:
    graph: BiGraph
    source: Vertex
    mode: str
    dist: list[float]                  # indexed by 2 * vertex_index + sign
    parent: list                       # (prev_state, eid, forward) or None
    popped: list[float] = field(default_factory=list)

    def _state(self, v, sign) -> int:
        return 2 * self.graph.index[v] + int(sign)

    @property
    def dist_plus(self) -> dict:
        return {v: self.dist[2 * i] for i, v in enumerate(self.graph.vertices)}

    @property
    def dist_minus(self) -> dict:
        return {v: self.dist[2 * i + 1] for i, v in enumerate(self.graph.vertices)}

    def label(self, v, sign: Sign) -> float:
        return self.dist[self._state(v, sign)]

    def distance(self, t: Vertex) -> float:
        """Shortest walk cost to ``t`` under this run's mode."""
        if self.mode == TERMINAL:
            return self.label(t, PLUS)
        return min(self.label(t, PLUS), self.label(t, MINUS))

    def walk_to(self, t: Vertex, sign: Sign | None = None) -> BiWalk | None:
        """Reconstruct a shortest walk ending at ``t`` (in state ``sign``)."""
        if sign is None:
            if self.mode == TERMINAL:
                sign = PLUS
            else:
                sign = PLUS if self.label(t, PLUS) <= self.label(t, MINUS) else MINUS
        st = self._state(t, sign)
        if self.dist[st] == INF:
            return None
        steps = []
        while True:
            link = self.parent[st]
            if link is None:
                break
            prev, eid, fwd = link
            steps.append((eid, fwd))
            if prev == _VIRTUAL:
                break
            st = prev
        steps.reverse()
        return BiWalk(self.source, tuple(steps))


def _seed(g: BiGraph, si: int, mode: str, dist, parent):
    """Initial states as ``(cost, state)`` pairs."""
    if mode == GENERAL:
        dist[2 * si] = dist[2 * si + 1] = 0.0
        return [(0.0, 2 * si), (0.0, 2 * si + 1)]
    # terminal: leave s through OUT incidences only; s itself starts unlabeled
    # so that closed terminal walks back to s are still discovered
    seeds = []
    for mv in g.moves[si][OUT]:
        st = 2 * mv.to + int(Sign.after_arrival(mv.arrival))
        if mv.weight < dist[st]:
            dist[st] = mv.weight
            parent[st] = (_VIRTUAL, mv.eid, mv.from_end == 0)
            seeds.append((mv.weight, st))
    return seeds


def _dijkstra(g: BiGraph, source, mode: str, target=None) -> DistLabels:
    if source not in g.index:
        raise KeyError(f"unknown source vertex {source!r}")
    n = len(g.vertices)
    dist = [INF] * (2 * n)
    parent: list = [None] * (2 * n)
    done = [False] * (2 * n)
    labels = DistLabels(g, source, mode, dist, parent)
    heap = [(d, st & 1, seq, st) for seq, (d, st) in enumerate(_seed(g, g.index[source], mode, dist, parent))]
    heapq.heapify(heap)
    seq = len(heap)
    goal = None
    if target is not None:
        ti = g.index[target]
        goal = {2 * ti} if mode == TERMINAL else {2 * ti, 2 * ti + 1}
    moves = g.moves
    while heap:
        d, _sign, _, st = heapq.heappop(heap)
        if done[st] or d > dist[st]:
            continue
        done[st] = True
        labels.popped.append(d)
        if goal is not None and st in goal:
            break
        v, sign = st >> 1, st & 1
        for mv in moves[v][OUT if sign == 0 else IN]:
            nst = 2 * mv.to + (0 if mv.arrival is IN else 1)
            nd = d + mv.weight
            if nd < dist[nst]:
                dist[nst] = nd
                parent[nst] = (st, mv.eid, mv.from_end == 0)
                seq += 1
                heapq.heappush(heap, (nd, nst & 1, seq, nst))
    return labels


def shortest_bidirected(g: BiGraph, source: Vertex, target: Vertex | None = None) -> DistLabels:
    """Shortest bi-directed walks from ``source``.

    With ``target`` the search stops as soon as either label of the target
    becomes permanent. Unreachable targets report ``inf``.
    """
    return _dijkstra(g, source, GENERAL, target)


def terminal_shortest(g: BiGraph, source: Vertex, target: Vertex | None = None) -> DistLabels:
    """Shortest terminal-oriented walks from ``source``.

    ``distance(source)`` is the cheapest *closed* terminal walk, never the
    empty walk.
    """
    return _dijkstra(g, source, TERMINAL, target)


def bfs_unit_weights(g: BiGraph, source: Vertex, mode: str = GENERAL) -> DistLabels:
    """Breadth-first variant for graphs whose edges all weigh 1."""
    if not g.unit_weights:
        raise ValueError("bfs_unit_weights needs unit edge weights; use shortest_bidirected "
                         "or terminal_shortest for weighted graphs")
    if mode not in (GENERAL, TERMINAL):
        raise ValueError(f"mode must be {GENERAL!r} or {TERMINAL!r}")
    if source not in g.index:
        raise KeyError(f"unknown source vertex {source!r}")
    n = len(g.vertices)
    dist = [INF] * (2 * n)
    parent: list = [None] * (2 * n)
    labels = DistLabels(g, source, mode, dist, parent)
    queue = deque(st for _, st in _seed(g, g.index[source], mode, dist, parent))
    while queue:
        st = queue.popleft()
        d = dist[st]
        labels.popped.append(d)
        for mv in g.moves[st >> 1][OUT if st & 1 == 0 else IN]:
            nst = 2 * mv.to + (0 if mv.arrival is IN else 1)
            if dist[nst] == INF:
                dist[nst] = d + 1
                parent[nst] = (st, mv.eid, mv.from_end == 0)
                queue.append(nst)
    return labels


def terminal_labels(g: BiGraph, source: Vertex) -> DistLabels:
    """Terminal run from ``source`` with BFS when the graph is unweighted."""
    if g.unit_weights:
        return bfs_unit_weights(g, source, TERMINAL)
    return terminal_shortest(g, source)


def terminal_labels_many(g: BiGraph, sources: Iterable[Vertex], threads: int = 1) -> dict:
    """One terminal run per source; runs are independent and may be threaded."""
    sources = list(sources)
    if threads <= 1 or len(sources) <= 1:
        return {s: terminal_labels(g, s) for s in sources}
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return dict(zip(sources, pool.map(lambda s: terminal_labels(g, s), sources)))
