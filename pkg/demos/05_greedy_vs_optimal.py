"""
Greedy versus optimal matching
==============================

The greedy matcher repeatedly takes the cheapest remaining pair. On
random imbalanced graphs it is rarely far from the optimum.
"""

import random

import numpy as np

from bidicpp import build_balancing_bipartite, solve_cpp_exact, solve_cpp_greedy
from bidicpp.simulate import perturbed_balanced_graph
from bidicpp.stats import ApproxRow, approx_row, format_tsv

ratios = []
rows = []
for seed in range(40):
    rng = random.Random(seed)
    g = perturbed_balanced_graph(20, 60, 6, rng, weights=(1, 10))
    if not build_balancing_bipartite(g).P:
        continue
    exact = solve_cpp_exact(g)
    if exact is None:
        continue
    ratios.append(solve_cpp_greedy(g).cost / exact.cost)
    rows.append(approx_row(g))

print(f"{len(ratios)} instances, walk cost ratio greedy/optimal: "
      f"mean {np.mean(ratios):.4f}, worst {max(ratios):.4f}")
print(format_tsv(rows[:5], ApproxRow.HEADER))
