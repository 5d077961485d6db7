"""Plain-text edge lists and vertex tables.

Edge list, one edge per line::

    # comment
    u v o1 o2 weight multiplicity

with ``o1``/``o2`` in ``{">", "<"}``. Header comments of the form
``# key=value`` are preserved as metadata (``k``, ``reads``, ...).

Vertex table: ``id<TAB>positive-strand`` per line.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import IO, Iterable

from .bigraph import BiEdge, BiGraph


class EdgeListError(ValueError):
    pass


def _vertex_token(tok: str):
    try:
        return int(tok)
    except ValueError:
        return tok


def format_number(x: float) -> str:
    """Integers without a trailing ``.0``; infinity as ``INF``."""
    if math.isinf(x):
        return "INF"
    if x == int(x):
        return str(int(x))
    return repr(float(x))


def parse_edge_list(lines: Iterable[str]) -> tuple[BiGraph, dict[str, str]]:
    """Parse edge-list text; returns the graph and ``# key=value`` metadata.

    Lines holding a single token declare an isolated vertex.
    """
    edges, extra_vertices, meta = [], [], {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if "=" in body and " " not in body.split("=", 1)[0]:
                key, val = body.split("=", 1)
                meta[key.strip()] = val.strip()
            continue
        toks = line.split()
        if len(toks) == 1:
            extra_vertices.append(_vertex_token(toks[0]))
            continue
        if len(toks) not in (4, 5, 6):
            raise EdgeListError(f"line {lineno}: expected 'u v o1 o2 [weight [multiplicity]]'")
        try:
            w = float(toks[4]) if len(toks) > 4 else 1.0
            m = int(toks[5]) if len(toks) > 5 else 1
            edges.append(BiEdge(_vertex_token(toks[0]), _vertex_token(toks[1]), toks[2], toks[3], w, m))
        except ValueError as exc:
            raise EdgeListError(f"line {lineno}: {exc}") from None
    return BiGraph(edges, extra_vertices), meta


def read_edge_list(path) -> tuple[BiGraph, dict[str, str]]:
    with open(path) as fh:
        return parse_edge_list(fh)


def format_edge_list(g: BiGraph, meta: dict | None = None) -> str:
    out = []
    for k, v in (meta or {}).items():
        out.append(f"# {k}={v}")
    touched = set()
    for e in g.edges:
        touched.add(e.u)
        touched.add(e.v)
        out.append(f"{e.u} {e.v} {e.o1.value} {e.o2.value} {format_number(e.weight)} {e.multiplicity}")
    for v in g.vertices:
        if v not in touched:
            out.append(str(v))
    return "\n".join(out) + "\n"


def write_edge_list(g: BiGraph, path, meta: dict | None = None) -> None:
    Path(path).write_text(format_edge_list(g, meta))


def read_vertex_table(path) -> dict:
    table = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise EdgeListError(f"vertex table line {lineno}: expected 'id<TAB>strand'")
            table[_vertex_token(parts[0])] = parts[1]
    return table


def write_vertex_table(table: dict, fh: IO[str]) -> None:
    for vid, strand in table.items():
        fh.write(f"{vid}\t{strand}\n")
