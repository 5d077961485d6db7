import random

from bidicpp.stats import ApproxRow, StatsRow, approx_row, format_tsv, stats_row
from bidicpp.simulate import random_bigraph

from conftest import graph


def _separated_pairs():
    """Two components, each one P->Q pair: the matrix is [[1, inf], [inf, 1]]."""
    edges = []
    for a, c, s, t in (("a", "c", "s1", "t1"), ("b", "d", "s2", "t2")):
        edges += [(s, a, ">", ">", 5, 2), (a, c, ">", ">", 1), (c, t, ">", ">", 5, 2),
                  (t, s, ">", ">", 5, 2)]
    return graph(*edges)


def test_stats_examples(path_graph, triangle):
    row = stats_row(path_graph)
    assert (row.P, row.Q, row.p) == (1, 1, 1)
    assert row.cells()[-1] == "33.333"
    assert stats_row(triangle).cells()[-1] == "0.000"


def test_stats_recomputed_independently():
    rng = random.Random(0)
    for _ in range(100):
        g = random_bigraph(rng.randint(1, 8), rng.randint(0, 12), rng)
        row = stats_row(g)
        # count spins straight from the symbols
        net = {v: 0 for v in g.vertices}
        for e in g.edges:
            net[e.u] += -e.multiplicity if e.o1.value == ">" else e.multiplicity
            net[e.v] += e.multiplicity if e.o2.value == ">" else -e.multiplicity
        plus = sum(d for d in net.values() if d > 0)
        minus = -sum(d for d in net.values() if d < 0)
        assert (row.vplus, row.vminus) == (sum(d > 0 for d in net.values()),
                                           sum(d < 0 for d in net.values()))
        assert (row.P, row.Q, row.p) == (plus, minus, max(plus, minus))


def test_approx_examples(triangle):
    row = approx_row(triangle)
    assert (row.p, row.m_opt, row.m_gdy, row.ratio) == (0, 0, 0, 1.0)
    row = approx_row(_separated_pairs())
    assert (row.p, row.m_opt, row.m_gdy, row.ratio) == (2, 2, 2, 1.0)


def test_approx_invariants():
    rng = random.Random(1)
    for _ in range(100):
        g = random_bigraph(rng.randint(2, 8), rng.randint(1, 12), rng, weights=(1, 4))
        row = approx_row(g)
        assert row.m_gdy <= row.m_opt <= row.p
        assert row.ratio >= 1.0


def test_tsv_layout():
    text = format_tsv([StatsRow(5, 21, 3, 1, 1, 1, 1, 1, 100 / 3)], StatsRow.HEADER)
    assert text.splitlines()[1].split("\t")[-1] == "33.333"
    assert len(ApproxRow.HEADER) == 9
