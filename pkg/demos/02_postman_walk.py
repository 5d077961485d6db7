"""
Cheapest closed walk over every edge
====================================

A graph whose vertices all take in as many IN ends as OUT ends has a
closed walk using each edge once. Otherwise some vertices carry surplus
IN ends (P side) and some surplus OUT ends (Q side), and cheapest
P-to-Q walks are matched and doubled up until everything balances.
"""

from bidicpp import (BiGraph, build_balancing_bipartite, imbalance_sets, solve_cpp_exact,
                     solve_cpp_greedy)

triangle = BiGraph.from_tuples([(1, 2, ">", ">"), (2, 3, ">", ">"), (3, 1, ">", ">")])
sol = solve_cpp_exact(triangle)
print("balanced triangle:", sol.cost, "|", sol.walk.describe(triangle))

# two surplus-IN vertices a, b and two surplus-OUT vertices c, d; the
# heavy s/t edges only exist to make the surpluses come out right
g = BiGraph.from_tuples([
    ("a", "c", ">", ">", 1), ("a", "d", ">", ">", 2),
    ("b", "c", ">", ">", 2), ("b", "d", ">", ">", 4),
    ("s", "a", ">", ">", 100, 3), ("s", "b", ">", ">", 100, 3),
    ("c", "t", ">", ">", 100, 3), ("d", "t", ">", ">", 100, 3),
    ("t", "s", ">", ">", 100, 6),
])
imb = imbalance_sets(g)
print("\nP side:", imb.vplus, " Q side:", imb.vminus)
b = build_balancing_bipartite(g)
print("cost of the cheapest P->Q walks:\n", b.cost_matrix())

exact, greedy = solve_cpp_exact(g), solve_cpp_greedy(g)
for name, s in (("optimal", exact), ("greedy", greedy)):
    print(f"{name:8s} edges={s.base_cost:g} extra={s.matching_cost:g} total={s.cost:g} "
          f"walk length={len(s.walk)}")
# greedy grabs the 1 first and is then stuck with the 4
