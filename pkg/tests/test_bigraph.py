import random

import pytest
from hypothesis import given, settings, strategies as st

from bidicpp.bigraph import (IN, OUT, BiEdge, BiGraph, BiWalk, DanglingEdgeError, Orientation,
                             Spin, components, degrees, imbalance_sets, is_connected, spin_at,
                             validate_walk)
from bidicpp.simulate import random_bigraph

from conftest import graph


def test_spin_definition_cases():
    e = BiEdge(1, 2, ">", ">")
    assert spin_at(e, 1) is OUT
    assert spin_at(e, 2) is IN
    assert spin_at(BiEdge(1, 2, ">", "<"), 2) is OUT


def test_spin_at_foreign_vertex():
    with pytest.raises(ValueError):
        spin_at(BiEdge(1, 2, ">", ">"), 3)


def test_orientation_parse_accepts_arrows():
    assert Orientation.parse("▷") is Orientation.RIGHT
    assert Orientation.parse("<") is Orientation.LEFT
    assert Spin.IN.opposite() is Spin.OUT


def test_edge_validation():
    with pytest.raises(ValueError):
        BiEdge(1, 2, ">", ">", weight=-1)
    with pytest.raises(ValueError):
        BiEdge(1, 2, ">", ">", multiplicity=0)


def test_reversed_edge_is_same_edge():
    e = BiEdge(1, 2, ">", "<", 3)
    r = e.reversed()
    assert (r.u, r.v) == (2, 1)
    assert spin_at(r, 1) is spin_at(e, 1) and spin_at(r, 2) is spin_at(e, 2)
    assert BiGraph([e]) == BiGraph([r])


def test_parallel_copies_merge_into_multiplicity():
    g = graph((1, 2, ">", ">"), (2, 1, "<", "<"))
    assert len(g.edges) == 1 and g.edges[0].multiplicity == 2


def test_validate_walk_examples():
    g = graph((1, 2, ">", "<"), (2, 3, "<", ">"))
    assert validate_walk(g, BiWalk(1, ((0, True), (1, True))))
    g = graph((1, 2, ">", ">"), (2, 3, "<", ">"))
    assert not validate_walk(g, BiWalk(1, ((0, True), (1, True))))
    g = graph((1, 2, ">", ">"))
    assert validate_walk(g, BiWalk(1, ((0, True),)))
    assert validate_walk(g, BiWalk(2, ((0, False),)))


def test_dangling_edge_is_not_an_invalid_walk():
    g = graph((1, 2, ">", ">"))
    with pytest.raises(DanglingEdgeError):
        validate_walk(g, BiWalk(1, ((5, True),)))


def test_cyclic_walk_needs_opposite_end_spins():
    loop = graph((1, 1, ">", ">"))
    assert validate_walk(loop, BiWalk(1, ((0, True),), cyclic=True))
    bad = graph((1, 1, ">", "<"))  # both incidences OUT
    assert not validate_walk(bad, BiWalk(1, ((0, True),), cyclic=True))


def test_degrees_examples():
    g = graph((1, 2, ">", ">"))
    assert degrees(g, 1) == (0, 1)
    assert degrees(g, 2) == (1, 0)
    assert degrees(graph((1, 2, ">", ">"), (1, 2, "<", "<")), 1) == (1, 1)
    with pytest.raises(KeyError):
        degrees(g, 9)


def test_imbalance_sets_examples(path_graph, triangle):
    s = imbalance_sets(path_graph)
    assert (s.vplus, s.vminus, s.p, s.d_max) == ((3,), (1,), 1, 1)
    s = imbalance_sets(triangle)
    assert (s.vplus, s.vminus, s.p) == ((), (), 0)
    s = imbalance_sets(BiGraph())
    assert (s.vplus, s.vminus, s.p, s.d_max) == ((), (), 0, 0)


def test_connectivity_examples():
    assert is_connected(graph((1, 2, ">", ">")))
    assert not is_connected(graph((1, 2, ">", ">"), vertices=[3]))
    assert is_connected(BiGraph())
    assert components(graph((1, 2, ">", ">"), (3, 4, ">", ">"))) == [[1, 2], [3, 4]]


def _naive_valid(edge_tuples, start, steps, cyclic):
    """Checker written from the raw symbols only."""
    def spin(tup, end):
        u, v, o1, o2 = tup[:4]
        if end == 0:
            return "OUT" if o1 == ">" else "IN"
        return "IN" if o2 == ">" else "OUT"

    at, last = start, None
    first = None
    for eid, fwd in steps:
        t = edge_tuples[eid]
        a, b = (0, 1) if fwd else (1, 0)
        if t[a] != at:
            return False
        dep = spin(t, a)
        if first is None:
            first = dep
        if last is not None and dep == last:
            return False
        at, last = t[b], spin(t, b)
    if cyclic and steps:
        return at == start and first != last
    return True


@settings(max_examples=1000, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_validate_walk_matches_naive_checker(seed):
    rng = random.Random(seed)
    g = random_bigraph(rng.randint(1, 5), rng.randint(1, 8), rng)
    tuples = [(e.u, e.v, e.o1.value, e.o2.value) for e in g.edges]
    # half the walks follow edges end to end, the rest are arbitrary step lists
    at = rng.choice(g.vertices)
    steps = []
    for _ in range(rng.randint(0, 6)):
        if rng.random() < 0.7:
            options = [(i, f) for i, t in enumerate(tuples) for f in (True, False)
                       if t[0 if f else 1] == at]
            if not options:
                break
            eid, fwd = rng.choice(options)
        else:
            eid, fwd = rng.randrange(len(tuples)), rng.random() < 0.5
        steps.append((eid, fwd))
        at = tuples[eid][1 if fwd else 0]
    start = tuples[steps[0][0]][0 if steps[0][1] else 1] if steps else at
    cyclic = rng.random() < 0.3
    w = BiWalk(start, tuple(steps), cyclic)
    assert validate_walk(g, w) == _naive_valid(tuples, start, steps, cyclic)


def test_walk_reversal_stays_valid():
    rng = random.Random(5)
    for _ in range(200):
        g = random_bigraph(4, 6, rng)
        from bidicpp.shortest import shortest_bidirected
        s = g.vertices[0]
        labels = shortest_bidirected(g, s)
        for t in g.vertices:
            w = labels.walk_to(t)
            if w is not None and w.steps:
                assert validate_walk(g, w.reversed(g))


def test_describe_renders_spins():
    g = graph((1, 2, ">", ">"), (2, 3, "<", "<"))
    w = BiWalk(1, ((0, True), (1, True)))
    assert w.describe(g) == "1 >> 2 << 3"
    assert w.vertices(g) == [1, 2, 3]
    assert w.cost(g) == 2
