"""
Walking a bi-directed graph
===========================

Every edge carries an arrowhead at each end. Read at a vertex, an end is
either IN (arrowhead points at the vertex) or OUT. A walk may pass through
a vertex only by arriving on one kind of end and leaving on the other.
"""

from bidicpp import BiGraph, BiWalk, shortest_bidirected, spin_at, terminal_shortest, validate_walk

g = BiGraph.from_tuples([(1, 2, ">", "<"), (2, 3, "<", ">"), (3, 1, ">", ">")])
for e in g.edges:
    print(e, "spin at", e.u, "=", spin_at(e, e.u).name, "| spin at", e.v, "=", spin_at(e, e.v).name)

# 1 -> 2 -> 3: arrive at 2 on an OUT end, leave on an IN end. Allowed.
w = BiWalk(1, ((0, True), (1, True)))
print("\n1 -> 2 -> 3 valid?", validate_walk(g, w), " ", w.describe(g))

# flip the second edge's arrowhead at 2 and the same route is blocked
h = BiGraph.from_tuples([(1, 2, ">", "<"), (2, 3, ">", ">")])
print("after flipping one arrowhead:", validate_walk(h, w))

# shortest walks track which kind of end the walk is due to leave on next
labels = shortest_bidirected(g, 1)
print("\ndistances from 1:", {t: labels.distance(t) for t in g.vertices})

# terminal walks must leave the source on an OUT end and enter the target on an IN end
labels = terminal_shortest(g, 1)
for t in g.vertices:
    walk = labels.walk_to(t)
    print(f"terminal 1 -> {t}: {labels.distance(t)}", walk.describe(g) if walk else "")
