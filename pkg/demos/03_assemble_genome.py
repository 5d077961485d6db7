"""
From reads to contigs
=====================

Simulate a genome, cut it into overlapping reads taken from either strand,
build the bi-directed de Bruijn graph and spell contigs back out of it.
"""

import random

from bidicpp import build_graph, solve_contigs, spell_walk
from bidicpp.debruijn import canonical_spectrum
from bidicpp.simulate import random_genome, sample_reads, tiling_reads
from bidicpp.stats import StatsRow, format_tsv, stats_row

rng = random.Random(42)
genome = random_genome(5000, rng)
k = 21

reads = tiling_reads(genome, 100, 50)
g = build_graph(reads, k)
print(f"{len(reads)} reads -> {len(g.vertices)} vertices, {len(g.edges)} edges")

sol = solve_contigs(g)
contigs = [spell_walk(g, w) for w in sol.contigs]
print("contig lengths:", sorted(map(len, contigs), reverse=True))

spelled = set().union(*(canonical_spectrum(c, k + 1) for c in contigs))
print("every (k+1)-mer of the genome recovered:", spelled == canonical_spectrum(genome, k + 1))

# random sampling leaves coverage gaps; each gap adds imbalanced vertices
rows = []
for cov in (2, 4, 8):
    sampled = sample_reads(genome, 100, cov, random.Random(cov))
    rows.append(stats_row(build_graph(sampled, k), len(sampled), k))
print(format_tsv(rows, StatsRow.HEADER))
