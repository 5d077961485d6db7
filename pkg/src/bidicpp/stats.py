"""Imbalance and matching-quality report rows (TSV)."""

from __future__ import annotations

from dataclasses import astuple, dataclass

from .bigraph import BiGraph, imbalance_sets
from .cpp import build_balancing_bipartite
from .matching import greedy_match, max_match_min_cost


@dataclass(frozen=True)
class StatsRow:
    reads: int
    k: int
    nodes: int
    vplus: int
    vminus: int
    P: int
    Q: int
    p: int
    percent: float  # p * 100 / |V|

    HEADER = ("reads", "k", "nodes", "V+", "V-", "P", "Q", "p", "p*100/|V|")

    def cells(self) -> list[str]:
        vals = [str(x) for x in astuple(self)[:-1]]
        return vals + [f"{self.percent:.3f}"]


@dataclass(frozen=True)
class ApproxRow:
    reads: int
    k: int
    nodes: int
    p: int
    m_opt: int
    opt_cost: int    # p - |M_opt|
    m_gdy: int
    gdy_cost: int    # p - |M_gdy|
    ratio: float

    HEADER = ("reads", "k", "nodes", "p", "|M_opt|", "p-|M_opt|", "|M_gdy|", "p-|M_gdy|", "GDY/OPT")

    def cells(self) -> list[str]:
        vals = [str(x) for x in astuple(self)[:-1]]
        return vals + [f"{self.ratio:.4f}"]


def stats_row(g: BiGraph, reads: int = 0, k: int = 0) -> StatsRow:
    """Imbalance counts of ``g``; ``p`` here is ``max(|P|, |Q|)`` over replicas."""
    imb = imbalance_sets(g)
    n_p, n_q = imb.n_p_replicas, imb.n_q_replicas
    p = max(n_p, n_q)
    pct = 100.0 * p / len(g.vertices) if g.vertices else 0.0
    return StatsRow(reads, k, len(g.vertices), len(imb.vplus), len(imb.vminus), n_p, n_q, p, pct)


def approx_row(g: BiGraph, reads: int = 0, k: int = 0, threads: int = 1) -> ApproxRow:
    """Greedy versus optimal maximum matching, priced by unmatched count.

    The balancing bipartite graph is treated as complete, absent pairs
    carrying a prohibitive cost, so a matching of size ``m`` costs
    ``p - m``. The ratio is 1.0 when the optimal proxy is zero.
    """
    b = build_balancing_bipartite(g, threads)
    c = b.cost_matrix()
    opt = max_match_min_cost(c)
    gdy = greedy_match(c)
    p = b.p
    opt_cost, gdy_cost = p - opt.size, p - gdy.size
    ratio = gdy_cost / opt_cost if opt_cost else 1.0
    return ApproxRow(reads, k, len(g.vertices), p, opt.size, opt_cost, gdy.size, gdy_cost, ratio)


def format_tsv(rows, header) -> str:
    lines = ["\t".join(header)]
    lines += ["\t".join(r.cells()) for r in rows]
    return "\n".join(lines) + "\n"

