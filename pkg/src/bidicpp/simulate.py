"""Seeded generators for genomes, reads and random bi-directed graphs."""

from __future__ import annotations

import itertools
import random

from .bigraph import BiEdge, BiGraph
from .debruijn import reverse_complement


def random_genome(length: int, rng: random.Random) -> str:
    return "".join(rng.choice("ACGT") for _ in range(length))


def tiling_reads(genome: str, read_len: int, step: int) -> list[str]:
    """Reads every ``step`` bases (plus one flush with the end); with
    ``read_len - step >= k`` every (k+1)-mer of the genome lies in a read."""
    if read_len >= len(genome):
        return [genome]
    starts = list(range(0, len(genome) - read_len + 1, step))
    if starts[-1] != len(genome) - read_len:
        starts.append(len(genome) - read_len)
    return [genome[s:s + read_len] for s in starts]


def sample_reads(genome: str, read_len: int, coverage: float, rng: random.Random,
                 both_strands: bool = True) -> list[str]:
    """Error-free reads at uniform random positions, random strand."""
    n = max(1, round(coverage * len(genome) / read_len))
    reads = []
    for _ in range(n):
        s = rng.randrange(0, len(genome) - read_len + 1)
        r = genome[s:s + read_len]
        if both_strands and rng.random() < 0.5:
            r = reverse_complement(r)
        reads.append(r)
    return reads


def random_bigraph(n_vertices: int, n_edges: int, rng: random.Random, weights=(1, 1),
                   loops: bool = True) -> BiGraph:
    """Uniform random endpoints and orientations; weights drawn from ``range(lo, hi + 1)``."""
    edges = []
    for _ in range(n_edges):
        u = rng.randrange(n_vertices)
        v = rng.randrange(n_vertices)
        if u == v and not loops:
            v = (u + 1) % n_vertices if n_vertices > 1 else u
        edges.append(BiEdge(u, v, rng.choice("<>"), rng.choice("<>"), rng.randint(*weights)))
    return BiGraph(edges, range(n_vertices))


def random_balanced_graph(n_vertices: int, n_steps: int, rng: random.Random,
                          weights=(1, 1)) -> BiGraph:
    """Edges of a random closed walk with random spins, hence balanced and connected.

    Only vertices the walk visits are kept, so some of the ``n_vertices``
    labels may be missing.

    Each step leaves the current vertex through the spin the walk requires
    and arrives through a random spin; the last step returns to the start
    with the spin that closes the cycle.
    """
    start = 0
    v = start
    need_out = rng.random() < 0.5
    first_out = need_out
    edges = []
    for i in range(n_steps):
        last = i == n_steps - 1
        w = start if last else rng.randrange(n_vertices)
        arrive_in = first_out if last else rng.random() < 0.5
        # leaving OUT at u means '>' at slot 1; arriving IN at w means '>' at slot 2
        o1 = ">" if need_out else "<"
        o2 = ">" if arrive_in else "<"
        edges.append(BiEdge(v, w, o1, o2, rng.randint(*weights)))
        v = w
        need_out = arrive_in
    return BiGraph(edges)


def exhaustive_graphs(n_vertices: int, max_edges: int, loops: bool = True, parallel: bool = True,
                      isolated: bool = True):
    """Every edge set of 1..``max_edges`` distinct bi-directed edges on ``n_vertices`` labelled vertices.

    ``parallel=False`` allows at most one edge per vertex pair (all four
    orientations still enumerated). ``isolated=False`` keeps only the
    vertices that some edge touches.
    """
    verts = range(n_vertices) if isolated else ()
    pairs = list(itertools.combinations(range(n_vertices), 2))
    orients = [(">", ">"), (">", "<"), ("<", ">"), ("<", "<")]
    loop_orients = [(">", ">"), (">", "<"), ("<", ">")]  # ('<','<') is the reverse of ('>','>')
    if parallel:
        types = [p + o for p in pairs for o in orients]
        if loops:
            types += [(v, v) + o for v in range(n_vertices) for o in loop_orients]
        for r in range(1, max_edges + 1):
            for combo in itertools.combinations(types, r):
                yield BiGraph.from_tuples(combo, verts)
        return
    slots = list(pairs)
    for r in range(1, max_edges + 1):
        for chosen in itertools.combinations(slots, r):
            for os_ in itertools.product(orients, repeat=r):
                yield BiGraph.from_tuples([c + o for c, o in zip(chosen, os_)], verts)


def perturbed_balanced_graph(n_vertices: int, n_steps: int, n_extra: int, rng: random.Random,
                             weights=(1, 1)) -> BiGraph:
    """A random closed walk's edges plus ``n_extra`` random edges among its vertices.

    The closed walk keeps the graph connected and usually lets terminal
    walks reach every imbalanced vertex, so the balancing bipartite graph
    tends to be complete.
    """
    base = random_balanced_graph(n_vertices, n_steps, rng, weights)
    verts = list(base.vertices)
    extra = [BiEdge(rng.choice(verts), rng.choice(verts), rng.choice("<>"), rng.choice("<>"),
                    rng.randint(*weights)) for _ in range(n_extra)]
    return BiGraph(list(base.edges) + extra)
