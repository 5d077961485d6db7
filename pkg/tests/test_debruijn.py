import random

import pytest

from bidicpp.bigraph import OUT, BiWalk, validate_walk
from bidicpp.debruijn import (InvalidBaseError, build_graph, build_graph_with_report, canonical,
                              canonical_spectrum, reverse_complement, spell_walk)
from bidicpp.simulate import random_genome, tiling_reads


def test_reverse_complement_examples():
    assert reverse_complement("AAGTA") == "TACTT"
    assert reverse_complement("AT") == "AT"
    assert reverse_complement(reverse_complement("GATTACA")) == "GATTACA"
    with pytest.raises(InvalidBaseError):
        reverse_complement("ACNT")


def test_canonical_examples():
    assert canonical("TACTT").positive == "AAGTA"
    assert canonical("AAGTA").positive == "AAGTA"
    assert canonical("ACGT").positive == "ACGT"
    assert canonical("TACTT").negative == "TACTT"


def test_build_acggt():
    g = build_graph(["ACGGT"], 3)
    assert len(g.edges) == 2
    # ACG, CGG, GGT canonicalize to ACG, CCG, ACC
    assert set(g.vertices) == {"ACG", "CCG", "ACC"}


def test_build_is_strand_symmetric():
    rng = random.Random(3)
    for _ in range(20):
        s = random_genome(40, rng)
        assert build_graph([s], 5) == build_graph([reverse_complement(s)], 5)


def test_homopolymer_gives_self_loop():
    g = build_graph(["AAAA"], 3)
    assert g.vertices == ("AAA",)
    assert len(g.edges) == 1 and g.edges[0].is_loop


def test_short_and_bad_reads_are_counted():
    g, report = build_graph_with_report(["AC", "ACGNT", "ACGT"], 3)
    assert report.skipped_short == 1
    assert report.rejected == 1
    assert len(g.edges) == 1


def test_every_edge_overlaps_by_k_minus_1():
    rng = random.Random(11)
    g = build_graph([random_genome(300, rng) for _ in range(3)], 7)
    for eid, e in enumerate(g.edges):
        w = BiWalk(e.u, ((eid, True),))
        s = spell_walk(g, w)
        assert len(s) == 8


def test_spell_empty_walk():
    g = build_graph(["ACGA"], 3)
    assert spell_walk(g, BiWalk("ACG"), start_spin=OUT) == "ACG"


def test_spell_acggt_round_trip():
    g = build_graph(["ACGGT"], 3)
    # the two edges share CCG; walk them end to end
    for start in g.vertices:
        for first in range(2):
            for fwd in (True, False):
                e = g.edges[first]
                if e.end_vertex(0 if fwd else 1) != start:
                    continue
                for fwd2 in (True, False):
                    w = BiWalk(start, ((first, fwd), (1 - first, fwd2)))
                    if validate_walk(g, w):
                        s = spell_walk(g, w)
                        assert canonical_spectrum(s, 4) == canonical_spectrum("ACGGT", 4)
                        return
    pytest.fail("no valid 2-edge walk")


def test_spell_rejects_invalid_walk():
    g = build_graph(["ACGGT"], 3)
    with pytest.raises(ValueError):
        spell_walk(g, BiWalk("ACG", ((0, True), (0, False))))


def test_tiling_covers_every_kmer():
    rng = random.Random(2)
    genome = random_genome(500, rng)
    reads = tiling_reads(genome, 60, 30)
    got = set().union(*(canonical_spectrum(r, 22) for r in reads))
    assert got == canonical_spectrum(genome, 22)
