"""Bi-directed graphs: edges with an arrowhead at each endpoint.

Orientation symbols (``>`` / ``<``) are only used at the I/O boundary.
Internally every incidence carries a :class:`Spin` relative to its vertex:
``OUT`` when the arrowhead points away from the vertex into the edge and
``IN`` when it points at the vertex. For an edge ``(u, v, o1, o2)`` the
spin at ``u`` is OUT iff ``o1`` is ``>`` and the spin at ``v`` is IN iff
``o2`` is ``>``, so ``(u, v, >, >)`` behaves like the directed arc u -> v.

A walk is valid when, at every intermediate vertex, the arrival spin and
the departure spin differ.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Sequence

Vertex = Hashable


_ARROWS = {"▷": ">", "◁": "<"}  # typeset arrowheads
_FLIP = {">": "<", "<": ">"}


class Orientation(enum.Enum):
    RIGHT = ">"
    LEFT = "<"

    def mirror(self) -> "Orientation":
        return Orientation.LEFT if self is Orientation.RIGHT else Orientation.RIGHT

    @classmethod
    def parse(cls, token) -> "Orientation":
        if isinstance(token, Orientation):
            return token
        token = _ARROWS.get(token, token)
        try:
            return cls(token)
        except ValueError:
            raise ValueError(f"orientation must be '>' or '<' (or ▷/◁), got {token!r}") from None


class Spin(enum.IntEnum):
    IN = 0
    OUT = 1

    def opposite(self) -> "Spin":
        return Spin.OUT if self is Spin.IN else Spin.IN


RIGHT, LEFT = Orientation.RIGHT, Orientation.LEFT
IN, OUT = Spin.IN, Spin.OUT


class DanglingEdgeError(LookupError):
    """A walk refers to an edge id that the graph does not contain."""


class DisconnectedGraphError(ValueError):
    def __init__(self, components):
        self.components = components
        shown = "; ".join(
            "{" + ", ".join(map(str, c[:5])) + (", ..." if len(c) > 5 else "") + "}"
            for c in components[:5]
        )
        super().__init__(f"graph has {len(components)} connected components: {shown}")


def order_key(v):
    """Sort key that tolerates a mix of int and str vertex ids."""
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return (0, v, "")
    return (1, 0, str(v))


@dataclass(frozen=True)
class BiEdge:
    u: Vertex
    v: Vertex
    o1: Orientation
    o2: Orientation
    weight: float = 1.0
    multiplicity: int = 1

    def __post_init__(self):
        object.__setattr__(self, "o1", Orientation.parse(self.o1))
        object.__setattr__(self, "o2", Orientation.parse(self.o2))
        if not self.weight >= 0:
            raise ValueError(f"edge weight must be non-negative, got {self.weight}")
        if int(self.multiplicity) != self.multiplicity or self.multiplicity < 1:
            raise ValueError(f"multiplicity must be a positive integer, got {self.multiplicity}")

    @property
    def spin_u(self) -> Spin:
        return OUT if self.o1 is RIGHT else IN

    @property
    def spin_v(self) -> Spin:
        return IN if self.o2 is RIGHT else OUT

    def end_vertex(self, end: int) -> Vertex:
        return self.u if end == 0 else self.v

    def end_spin(self, end: int) -> Spin:
        return self.spin_u if end == 0 else self.spin_v

    def is_loop(self) -> bool:
        return self.u == self.v

    def reversed(self) -> "BiEdge":
        """The same physical edge written from the other endpoint."""
        return BiEdge(self.v, self.u, self.o2.mirror(), self.o1.mirror(),
                      self.weight, self.multiplicity)

    def key(self):
        """Identity used to merge parallel copies (orientation-aware)."""
        ku, kv = order_key(self.u), order_key(self.v)
        a = (ku, kv, self.o1.value, self.o2.value)
        b = (kv, ku, _FLIP[self.o2.value], _FLIP[self.o1.value])
        return (min(a, b), self.weight)

    def __str__(self):
        return f"({self.u},{self.v},{self.o1.value},{self.o2.value})"


def spin_at(edge: BiEdge, vertex: Vertex, end: int | None = None) -> Spin:
    """Spin of ``edge`` at ``vertex``.

    ``end`` (0 for the ``u`` slot, 1 for ``v``) picks the incidence of a
    self-loop; without it a loop reports its ``u`` incidence.
    """
    if end is not None:
        if edge.end_vertex(end) != vertex:
            raise ValueError(f"vertex {vertex!r} is not at end {end} of {edge}")
        return edge.end_spin(end)
    if edge.u == vertex:
        return edge.spin_u
    if edge.v == vertex:
        return edge.spin_v
    raise ValueError(f"vertex {vertex!r} is not an endpoint of {edge}")


def _coerce_edge(e) -> BiEdge:
    if isinstance(e, BiEdge):
        return e
    return BiEdge(*e)


@dataclass(frozen=True)
class Move:
    """One way to leave a vertex: traverse ``eid`` starting at ``from_end``."""
    eid: int
    from_end: int
    to: int  # vertex index at the far end
    arrival: Spin
    weight: float


class BiGraph:
    """Immutable bi-directed multigraph.

    Parallel edges with the same endpoints, orientations and weight are
    stored once with their multiplicities summed. Edge ids are positions in
    :attr:`edges`.
    """

    def __init__(self, edges: Iterable = (), vertices: Iterable[Vertex] = ()):
        merged: dict = {}
        for raw in edges:
            e = _coerce_edge(raw)
            k = e.key()
            if k in merged:
                old = merged[k]
                merged[k] = BiEdge(old.u, old.v, old.o1, old.o2, old.weight,
                                   old.multiplicity + e.multiplicity)
            else:
                merged[k] = e
        self.edges: tuple[BiEdge, ...] = tuple(merged.values())
        vs = set(vertices)
        for e in self.edges:
            vs.add(e.u)
            vs.add(e.v)
        self.vertices: tuple[Vertex, ...] = tuple(sorted(vs, key=order_key))
        self.index: dict[Vertex, int] = {v: i for i, v in enumerate(self.vertices)}

        n = len(self.vertices)
        # incidences[i] -> list of (eid, end, spin); loops contribute two
        self.incidences: list[list[tuple[int, int, Spin]]] = [[] for _ in range(n)]
        # moves[i][spin] -> departures from vertex i through an incidence of that spin
        self.moves: list[tuple[list[Move], list[Move]]] = [([], []) for _ in range(n)]
        for eid, e in enumerate(self.edges):
            for end in (0, 1):
                i = self.index[e.end_vertex(end)]
                far = 1 - end
                s = e.end_spin(end)
                self.incidences[i].append((eid, end, s))
                self.moves[i][s].append(
                    Move(eid, end, self.index[e.end_vertex(far)], e.end_spin(far), e.weight))

    @classmethod
    def from_tuples(cls, tuples: Iterable[Sequence], vertices: Iterable[Vertex] = ()) -> "BiGraph":
        return cls((BiEdge(*t) for t in tuples), vertices)

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self.index

    def __repr__(self):
        return f"BiGraph(|V|={len(self.vertices)}, |E|={len(self.edges)})"

    def __eq__(self, other):
        if not isinstance(other, BiGraph):
            return NotImplemented
        return (self.vertices == other.vertices
                and sorted(e.key() + (e.multiplicity,) for e in self.edges)
                == sorted(e.key() + (e.multiplicity,) for e in other.edges))

    __hash__ = None

    @property
    def unit_weights(self) -> bool:
        return all(e.weight == 1 for e in self.edges)

    def total_weight(self) -> float:
        return sum(e.weight * e.multiplicity for e in self.edges)

    def edge_count(self) -> int:
        """Number of edges counting multiplicity."""
        return sum(e.multiplicity for e in self.edges)

    def imbalance(self, v: Vertex, multiplicity: Sequence[int] | None = None) -> int:
        """``d_in(v) - d_out(v)``; ``multiplicity`` overrides per-edge counts."""
        d = 0
        for eid, _end, s in self.incidences[self.index[v]]:
            m = self.edges[eid].multiplicity if multiplicity is None else multiplicity[eid]
            d += m if s is IN else -m
        return d


def degrees(g: BiGraph, v: Vertex) -> tuple[int, int]:
    """Return ``(d_in, d_out)`` counting multiplicity."""
    if v not in g.index:
        raise KeyError(f"unknown vertex {v!r}")
    d_in = d_out = 0
    for eid, _end, s in g.incidences[g.index[v]]:
        if s is IN:
            d_in += g.edges[eid].multiplicity
        else:
            d_out += g.edges[eid].multiplicity
    return d_in, d_out


@dataclass(frozen=True)
class ImbalanceSets:
    vplus: tuple      # d_in - d_out > 0
    vminus: tuple     # d_in - d_out < 0
    p: int
    d_max: int
    excess: dict      # vertex -> |d_in - d_out| for imbalanced vertices

    @property
    def n_p_replicas(self) -> int:
        return sum(self.excess[v] for v in self.vplus)

    @property
    def n_q_replicas(self) -> int:
        return sum(self.excess[v] for v in self.vminus)


def imbalance_sets(g: BiGraph, multiplicity: Sequence[int] | None = None) -> ImbalanceSets:
    plus, minus, excess = [], [], {}
    d_max = 0
    for v in g.vertices:
        d = g.imbalance(v, multiplicity)
        if d > 0:
            plus.append(v)
        elif d < 0:
            minus.append(v)
        if d:
            excess[v] = abs(d)
            d_max = max(d_max, abs(d))
    return ImbalanceSets(tuple(plus), tuple(minus), max(len(plus), len(minus)), d_max, excess)


@dataclass(frozen=True)
class BiWalk:
    """A walk given as a start vertex and ``(edge id, forward)`` steps.

    ``forward`` means the edge is traversed from its ``u`` end to its ``v``
    end; for self-loops this is what tells the two incidences apart.
    """
    start: Vertex
    steps: tuple[tuple[int, bool], ...] = ()
    cyclic: bool = False

    def __len__(self):
        return len(self.steps)

    def edge_ids(self) -> list[int]:
        return [eid for eid, _ in self.steps]

    def vertices(self, g: BiGraph) -> list[Vertex]:
        out = [self.start]
        for eid, fwd in self.steps:
            out.append(g.edges[eid].end_vertex(1 if fwd else 0))
        return out

    def departure_spin(self, g: BiGraph) -> Spin | None:
        if not self.steps:
            return None
        eid, fwd = self.steps[0]
        return g.edges[eid].end_spin(0 if fwd else 1)

    def arrival_spin(self, g: BiGraph) -> Spin | None:
        if not self.steps:
            return None
        eid, fwd = self.steps[-1]
        return g.edges[eid].end_spin(1 if fwd else 0)

    def cost(self, g: BiGraph) -> float:
        return sum(g.edges[eid].weight for eid, _ in self.steps)

    def reversed(self, g: BiGraph) -> "BiWalk":
        end = self.vertices(g)[-1]
        return BiWalk(end, tuple((eid, not fwd) for eid, fwd in reversed(self.steps)), self.cyclic)

    def describe(self, g: BiGraph) -> str:
        """``v0 -s- v1 ...`` with each edge's spins at its traversed ends."""
        parts = [str(self.start)]
        for eid, fwd in self.steps:
            e = g.edges[eid]
            a, b = (0, 1) if fwd else (1, 0)
            sa = ">" if e.end_spin(a) is OUT else "<"
            sb = ">" if e.end_spin(b) is IN else "<"
            parts.append(f"{sa}{sb} {e.end_vertex(b)}")
        return " ".join(parts)


def validate_walk(g: BiGraph, w: BiWalk) -> bool:
    """True iff ``w`` is a valid bi-directed walk in ``g``.

    Raises :class:`DanglingEdgeError` when a step names a missing edge,
    which is a structural problem rather than an invalid walk.
    """
    for eid, _ in w.steps:
        if not 0 <= eid < len(g.edges):
            raise DanglingEdgeError(f"edge id {eid} not in graph")
    if w.start not in g.index:
        return False
    at = w.start
    arrived: Spin | None = None
    for eid, fwd in w.steps:
        e = g.edges[eid]
        src, dst = (0, 1) if fwd else (1, 0)
        if e.end_vertex(src) != at:
            return False
        if arrived is not None and e.end_spin(src) is arrived:
            return False
        at = e.end_vertex(dst)
        arrived = e.end_spin(dst)
    if w.cyclic and w.steps:
        if at != w.start or w.departure_spin(g) is arrived:
            return False
    return True


def components(g: BiGraph) -> list[list[Vertex]]:
    """Undirected connected components, each sorted, ordered by first vertex."""
    n = len(g.vertices)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in g.edges:
        a, b = find(g.index[e.u]), find(g.index[e.v])
        if a != b:
            parent[max(a, b)] = min(a, b)
    groups: dict[int, list] = {}
    for i, v in enumerate(g.vertices):
        groups.setdefault(find(i), []).append(v)
    return list(groups.values())


def _reachable_vertices(g: BiGraph, i: int) -> set[int]:
    seen = {(i, OUT), (i, IN)}
    queue = deque(seen)
    while queue:
        j, need = queue.popleft()
        for mv in g.moves[j][need]:
            st = (mv.to, mv.arrival.opposite())
            if st not in seen:
                seen.add(st)
                queue.append(st)
    return {j for j, _ in seen}


def is_connected(g: BiGraph) -> bool:
    """Every ordered pair of vertices is joined by a valid bi-directed walk.

    Reachability is not transitive in a bi-directed graph, so each vertex
    is searched on the doubled (vertex, required spin) state graph. A
    balanced, undirected-connected graph has a cyclic Euler tour and is
    accepted without the search.
    """
    n = len(g.vertices)
    if n <= 1:
        return True
    if len(components(g)) > 1:
        return False
    if all(g.imbalance(v) == 0 for v in g.vertices):
        return True
    return all(len(_reachable_vertices(g, i)) == n for i in range(n))


def iter_steps(g: BiGraph, w: BiWalk) -> Iterator[tuple[BiEdge, int, int]]:
    """Yield ``(edge, from_end, to_end)`` along the walk."""
    for eid, fwd in w.steps:
        yield g.edges[eid], (0 if fwd else 1), (1 if fwd else 0)
