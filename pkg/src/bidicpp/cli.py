"""Command-line interface: ``bidicpp <command> ...``.

Exit codes: 2 unreadable input, 3 bad ``k``, 4 malformed FASTA or graph
file, 5 no cyclic Chinese Postman walk (exact mode), 6 disconnected graph
in a mode that needs connectivity.
"""

from __future__ import annotations

import argparse
import io
import logging
import sys
from pathlib import Path

from .bigraph import BiEdge, BiGraph, DisconnectedGraphError
from .cpp import (CppSolution, SolutionKind, build_balancing_bipartite, solve_contigs,
                  solve_cpp_exact, solve_cpp_greedy)
from .debruijn import build_graph_with_report, spell_walk
from .edgelist import (EdgeListError, format_edge_list, format_number, read_edge_list,
                       read_vertex_table, write_vertex_table)
from .fasta import FastaFormatError, Record, read_fasta, write_fasta
from .matching import dump_tsv
from .shortest import bfs_unit_weights, shortest_bidirected, terminal_shortest, GENERAL, TERMINAL
from .stats import ApproxRow, StatsRow, approx_row, format_tsv, stats_row

logger = logging.getLogger("bidicpp")

EXIT_UNREADABLE, EXIT_BAD_K, EXIT_MALFORMED, EXIT_NO_CPW, EXIT_DISCONNECTED = 2, 3, 4, 5, 6
MAX_K = 31


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _vertex(tok: str):
    try:
        return int(tok)
    except ValueError:
        return tok


def _load_graph(args):
    path = Path(args.graph)
    if not path.is_file():
        raise CliError(f"cannot read graph file {path}", EXIT_UNREADABLE)
    try:
        g, meta = read_edge_list(path)
    except (EdgeListError, UnicodeDecodeError) as exc:
        raise CliError(f"{path}: {exc}", EXIT_MALFORMED) from None
    return g, meta


def _vertex_table(args):
    path = Path(args.vertices) if getattr(args, "vertices", None) else Path(args.graph).with_suffix(".vertices")
    if not path.is_file():
        if getattr(args, "vertices", None):
            raise CliError(f"cannot read vertex table {path}", EXIT_UNREADABLE)
        return None
    try:
        return read_vertex_table(path)
    except EdgeListError as exc:
        raise CliError(f"{path}: {exc}", EXIT_MALFORMED) from None


def _meta_int(meta, key) -> int:
    try:
        return int(meta.get(key, 0))
    except ValueError:
        return 0


def cmd_build(args, out) -> None:
    if not 2 <= args.k <= MAX_K:
        raise CliError(f"k must be between 2 and {MAX_K}, got {args.k}", EXIT_BAD_K)
    path = Path(args.fasta)
    if not path.is_file():
        raise CliError(f"cannot read FASTA file {path}", EXIT_UNREADABLE)
    try:
        with open(path) as fh:
            reads = [rec.sequence for rec in read_fasta(fh)]
    except (FastaFormatError, UnicodeDecodeError) as exc:
        raise CliError(f"{path}: {exc}", EXIT_MALFORMED) from None
    g, report = build_graph_with_report(reads, args.k)
    ids = {strand: i for i, strand in enumerate(g.vertices)}
    relabeled = BiGraph((BiEdge(ids[e.u], ids[e.v], e.o1, e.o2, e.weight, e.multiplicity) for e in g.edges),
                        range(len(ids)))
    prefix = Path(args.out)
    meta = {"k": args.k, "reads": report.reads, "rejected": report.rejected,
            "skipped_short": report.skipped_short}
    if args.seed is not None:
        meta["seed"] = args.seed
    Path(str(prefix) + ".edges").write_text(format_edge_list(relabeled, meta))
    with open(str(prefix) + ".vertices", "w") as fh:
        write_vertex_table({i: s for s, i in ids.items()}, fh)
    out.write(f"|V|={len(g.vertices)}\t|E|={len(g.edges)}\n")


def cmd_stats(args, out) -> None:
    g, meta = _load_graph(args)
    row = stats_row(g, _meta_int(meta, "reads"), _meta_int(meta, "k"))
    out.write(format_tsv([row], StatsRow.HEADER))


def cmd_compare_matching(args, out) -> None:
    g, meta = _load_graph(args)
    row = approx_row(g, _meta_int(meta, "reads"), _meta_int(meta, "k"), args.threads)
    out.write(format_tsv([row], ApproxRow.HEADER))
    if args.verbose:
        buf = io.StringIO()
        dump_tsv(build_balancing_bipartite(g, args.threads).cost_matrix(), buf)
        sys.stderr.write(buf.getvalue())


def cmd_shortest(args, out) -> None:
    g, _ = _load_graph(args)
    src = _vertex(args.source)
    if src not in g.index:
        raise CliError(f"unknown source vertex {args.source}", EXIT_MALFORMED)
    mode = TERMINAL if args.terminal else GENERAL
    if args.target is not None:
        tgt = _vertex(args.target)
        if tgt not in g.index:
            raise CliError(f"unknown target vertex {args.target}", EXIT_MALFORMED)
        targets = [tgt]
    else:
        targets = list(g.vertices)
    if g.unit_weights:
        labels = bfs_unit_weights(g, src, mode)
    else:
        labels = (terminal_shortest if args.terminal else shortest_bidirected)(g, src)
    for t in targets:
        out.write(f"{t}\t{format_number(labels.distance(t))}\n")
    if args.oracle:
        from .oracle import oracle_shortest
        bad = [t for t in targets if oracle_shortest(g, src, t, mode) != labels.distance(t)]
        sys.stderr.write(f"oracle check: {'OK' if not bad else 'MISMATCH at ' + ', '.join(map(str, bad))}\n")


def _report(g, sol: CppSolution, out) -> None:
    out.write(f"kind\t{sol.kind.value}\n")
    out.write(f"base={format_number(sol.base_cost)} matching={format_number(sol.matching_cost)} "
              f"total={format_number(sol.cost)}\n")
    for i, w in enumerate(sol.walks(), 1):
        out.write(f"walk {i}\tlength={len(w)}\t{w.describe(g)}\n")


def cmd_cpp(args, out) -> None:
    g, _ = _load_graph(args)
    table = _vertex_table(args)
    try:
        if args.contigs:
            sol = solve_contigs(g, greedy=args.greedy, threads=args.threads)
        elif args.greedy:
            sol = solve_cpp_greedy(g, args.threads)
        else:
            sol = solve_cpp_exact(g, args.threads)
    except DisconnectedGraphError as exc:
        raise CliError(f"{exc}; use --contigs for disconnected graphs", EXIT_DISCONNECTED) from None
    if sol is None:
        out.write("kind\tNO_CYCLIC_CP_WALK\n")
        raise CliError("NO_CYCLIC_CP_WALK: the balancing bipartite graph has no perfect matching",
                       EXIT_NO_CPW)
    if args.oracle:
        from .oracle import BudgetExceeded, oracle_cpp
        try:
            ref = oracle_cpp(g)
            sys.stderr.write(f"oracle minimum cyclic covering walk: {ref}\n")
        except BudgetExceeded as exc:
            sys.stderr.write(f"oracle skipped: {exc}\n")
    _report(g, sol, out)
    if table is not None:
        records = []
        for i, w in enumerate(sol.walks(), 1):
            name = "cyclic_walk" if sol.kind is SolutionKind.CYCLIC_CP_WALK else f"contig_{i}"
            seq = spell_walk(g, w, labels=table)
            records.append(Record(f"{name} length={len(seq)}", seq))
        if args.fasta_out:
            with open(args.fasta_out, "w") as fh:
                write_fasta(records, fh)
        else:
            write_fasta(records, out)


def cmd_contigs(args, out) -> None:
    args.contigs = True
    cmd_cpp(args, out)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output file (default: stdout); for build, the output prefix")
    common.add_argument("--threads", type=int, default=1, help="worker threads for shortest-walk runs")
    common.add_argument("--seed", type=int, default=None, help="recorded in output headers")
    common.add_argument("--verbose", action="store_true")
    common.add_argument("--oracle", action="store_true", help="cross-check against brute force (tiny graphs)")

    parser = argparse.ArgumentParser(prog="bidicpp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="bi-directed de Bruijn graph from FASTA reads")
    p.add_argument("--fasta", required=True)
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(func=cmd_build)

    for name, func, helptext in (("stats", cmd_stats, "imbalance statistics as TSV"),
                                 ("compare-matching", cmd_compare_matching,
                                  "greedy vs optimal matching sizes as TSV")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--graph", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("shortest", parents=[common], help="shortest bi-directed walk distances")
    p.add_argument("--graph", required=True)
    p.add_argument("--source", required=True)
    p.add_argument("--target")
    p.add_argument("--terminal", action="store_true")
    p.set_defaults(func=cmd_shortest)

    for name, func in (("cpp", cmd_cpp), ("contigs", cmd_contigs)):
        p = sub.add_parser(name, parents=[common], help="cyclic Chinese Postman walk or contigs")
        p.add_argument("--graph", required=True)
        p.add_argument("--vertices", help="vertex table (default: <graph>.vertices if present)")
        p.add_argument("--greedy", action="store_true")
        p.add_argument("--fasta-out", help="write spelled walks here instead of after the report")
        if name == "cpp":
            p.add_argument("--contigs", action="store_true")
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command == "build" and not args.out:
        parser.error("build needs --out PREFIX")
    buf = io.StringIO()
    code = 0
    try:
        args.func(args, buf)
    except CliError as exc:
        sys.stderr.write(f"bidicpp: {exc}\n")
        code = exc.code
    text = buf.getvalue()
    if args.out and args.command != "build":
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
