"""
When the matching says no
=========================

The exact solver declares "no cyclic walk" when surplus-IN and
surplus-OUT vertices cannot be perfectly paired. Edges that are OUT at
both ends, or IN at both ends, break that rule: here both vertices have
a surplus of IN ends, so there is nothing to pair with, yet a closed walk
covering everything exists. The brute-force oracle finds it.
"""

from bidicpp import BiGraph, BiWalk, imbalance_sets, solve_contigs, solve_cpp_exact, validate_walk
from bidicpp.oracle import oracle_cpp

g = BiGraph.from_tuples([(0, 1, ">", "<"), (0, 0, "<", ">"), (1, 1, "<", ">")])
imb = imbalance_sets(g)
print("surplus-IN:", imb.vplus, " surplus-OUT:", imb.vminus)
print("exact solver:", solve_cpp_exact(g))
print("oracle:", oracle_cpp(g))

# the walk it finds: over to 1, round the loop, back, round the other loop
eid = {str(e): i for i, e in enumerate(g.edges)}
w = BiWalk(0, ((eid["(0,1,>,<)"], True), (eid["(1,1,<,>)"], True),
               (eid["(0,1,>,<)"], False), (eid["(0,0,<,>)"], True)), cyclic=True)
print(w.describe(g), "valid:", validate_walk(g, w), "cost:", w.cost(g))

# contig mode still covers every edge, as open walks
for c in solve_contigs(g).contigs:
    print("contig:", c.describe(g))
