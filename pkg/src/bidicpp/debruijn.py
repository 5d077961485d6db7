"""Bi-directed de Bruijn graphs over k-molecules.

A vertex is a k-molecule, identified by its canonical (lexicographically
smaller) strand. Every (k+1)-mer ``z`` of the reads and of their reverse
complements joins the molecules of its prefix ``x`` and suffix ``y``:

====================  ==================
x strand / y strand   edge
====================  ==================
positive / positive   ``(X, Y, >, >)``
positive / negative   ``(X, Y, >, <)``
negative / positive   ``(X, Y, <, >)``
negative / negative   ``(Y, X, >, >)``
====================  ==================

The last row is the reverse of ``(X, Y, <, <)``, i.e. the edge that
``rc(z)`` produces, so both strands of a read yield the same edge set.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .bigraph import BiEdge, BiGraph, BiWalk, IN, OUT, Spin, validate_walk

logger = logging.getLogger(__name__)

ALPHABET = frozenset("ACGT")
_COMPLEMENT = str.maketrans("ACGT", "TGCA")


class InvalidBaseError(ValueError):
    pass


def _check(s: str) -> None:
    if not ALPHABET.issuperset(s):
        bad = sorted(set(s) - ALPHABET)
        raise InvalidBaseError(f"non-ACGT characters {bad} in {s[:30]!r}")


def reverse_complement(s: str) -> str:
    _check(s)
    return s.translate(_COMPLEMENT)[::-1]


@dataclass(frozen=True)
class KMolecule:
    positive: str
    negative: str

    @property
    def k(self) -> int:
        return len(self.positive)

    def strand(self, spin: Spin, *, arriving: bool) -> str:
        """Strand read when departing (``arriving=False``) or arriving with ``spin``."""
        if arriving:
            return self.positive if spin is IN else self.negative
        return self.positive if spin is OUT else self.negative


def canonical(s: str) -> KMolecule:
    r = reverse_complement(s)
    return KMolecule(s, r) if s <= r else KMolecule(r, s)


def canonical_spectrum(seq: str, k: int) -> set[str]:
    """Canonical strands of every k-mer of ``seq``."""
    out = set()
    for i in range(len(seq) - k + 1):
        w = seq[i:i + k]
        r = w.translate(_COMPLEMENT)[::-1]
        out.add(min(w, r))
    return out


@dataclass
class BuildReport:
    reads: int = 0
    skipped_short: int = 0
    rejected: int = 0
    rejected_examples: list = field(default_factory=list)


def _kmer_edge(z: str, k: int, canon: dict) -> BiEdge:
    x, y = z[:k], z[1:]
    cx, cy = canon[x], canon[y]
    # palindromic k-mers (even k only) count as positive strands
    xp, yp = x == cx, y == cy
    if xp and yp:
        return BiEdge(cx, cy, ">", ">")
    if xp:
        return BiEdge(cx, cy, ">", "<")
    if yp:
        return BiEdge(cx, cy, "<", ">")
    return BiEdge(cy, cx, ">", ">")


def build_graph_with_report(reads: Iterable[str], k: int) -> tuple[BiGraph, BuildReport]:
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    report = BuildReport()
    kmers: set[str] = set()
    kp1mers: set[str] = set()
    for read in reads:
        report.reads += 1
        read = read.upper()
        if not ALPHABET.issuperset(read):
            report.rejected += 1
            if len(report.rejected_examples) < 5:
                report.rejected_examples.append(read[:40])
            continue
        if len(read) < k:
            report.skipped_short += 1
            continue
        rc = read.translate(_COMPLEMENT)[::-1]
        for s in (read, rc):
            kmers.update(s[i:i + k] for i in range(len(s) - k + 1))
            kp1mers.update(s[i:i + k + 1] for i in range(len(s) - k))
    if report.rejected:
        logger.warning("rejected %d read(s) with non-ACGT characters", report.rejected)
    if report.skipped_short:
        logger.warning("skipped %d read(s) shorter than k=%d", report.skipped_short, k)

    canon = {}
    for w in kmers:
        r = w.translate(_COMPLEMENT)[::-1]
        canon[w] = min(w, r)
    # z and its reverse complement spell the same edge; build it once
    edges = [_kmer_edge(z, k, canon) for z in kp1mers if z <= z.translate(_COMPLEMENT)[::-1]]
    edges.sort(key=BiEdge.key)
    return BiGraph(edges, set(canon.values())), report


def build_graph(reads: Iterable[str], k: int) -> BiGraph:
    """Bi-directed de Bruijn graph of order ``k`` on ``reads`` and their reverse complements.

    Edges have weight 1 and multiplicity 1 however often a (k+1)-mer
    occurs. Reads with non-ACGT characters are dropped whole; reads shorter
    than ``k`` are skipped. Both are logged.
    """
    return build_graph_with_report(reads, k)[0]


def spell_walk(g: BiGraph, w: BiWalk, labels: Mapping | None = None,
               start_spin: Spin = OUT) -> str:
    """DNA string spelled by a walk.

    ``labels`` maps vertex ids to positive strands; by default vertex ids
    are the strands themselves. ``start_spin`` only matters for an empty
    walk, otherwise the first departure decides the starting strand.
    """
    if not validate_walk(g, w):
        raise ValueError("cannot spell an invalid bi-directed walk")

    def molecule(v) -> KMolecule:
        pos = labels[v] if labels is not None else v
        return KMolecule(pos, reverse_complement(pos))

    first = molecule(w.start)
    dep = w.departure_spin(g) if w.steps else start_spin
    out = [first.strand(dep, arriving=False)]
    tail = out[0][1:]
    for eid, fwd in w.steps:
        e = g.edges[eid]
        to_end = 1 if fwd else 0
        strand = molecule(e.end_vertex(to_end)).strand(e.end_spin(to_end), arriving=True)
        if strand[:-1] != tail:
            raise ValueError(f"edge {e} does not overlap by k-1 bases along the walk")
        out.append(strand[-1])
        tail = strand[1:]
    return "".join(out)
