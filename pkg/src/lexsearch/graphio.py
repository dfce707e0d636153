"""Plain-text edge-list format and DOT export.

Text format::

    # comment
    n m
    u v            (m lines, 0-based ids)
    name <id> <label>   (optional, after the edges)
"""

from __future__ import annotations

from pathlib import Path

from .errors import GraphInputError
from .graph import Graph, build_graph


def parse_graph(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            rows.append((lineno, line))
    if not rows:
        raise GraphInputError("empty graph file: missing 'n m' header")
    lineno, header = rows[0]
    try:
        n, m = (int(tok) for tok in header.split())
    except ValueError:
        raise GraphInputError(f"line {lineno}: expected header 'n m', got {header!r}") from None
    if n < 0 or m < 0:
        raise GraphInputError(f"line {lineno}: negative count in header")
    edge_rows = rows[1:1 + m]
    if len(edge_rows) < m:
        raise GraphInputError(f"header announces {m} edges, file has {len(edge_rows)}")
    edges = []
    for lineno, line in edge_rows:
        parts = line.split()
        if len(parts) != 2:
            raise GraphInputError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphInputError(f"line {lineno}: non-integer vertex id in {line!r}") from None
    names = {}
    for lineno, line in rows[1 + m:]:
        parts = line.split(maxsplit=2)
        if len(parts) != 3 or parts[0] != "name":
            raise GraphInputError(f"line {lineno}: expected 'name <id> <label>', got {line!r}")
        try:
            names[int(parts[1])] = parts[2]
        except ValueError:
            raise GraphInputError(f"line {lineno}: non-integer vertex id in {line!r}") from None
    try:
        return build_graph(n, edges, names)
    except GraphInputError as exc:
        raise GraphInputError(f"invalid graph: {exc}") from None


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def format_graph(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.vertex_count} {len(edges)}"]
    lines += [f"{u} {v}" for u, v in edges]
    lines += [f"name {v} {label}" for v, label in sorted(g.names.items())]
    return "\n".join(lines) + "\n"


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g))


def format_dot(g: Graph, title: str = "G") -> str:
    lines = [f"graph {title} {{"]
    for v in g.vertices:
        label = g.name(v).replace('"', r"\"")
        lines.append(f'  {v} [label="{label}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_ordering(order) -> str:
    return " ".join(str(v) for v in order)


def parse_ordering(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError:
        raise GraphInputError(f"ordering must be space-separated integers, got {text.strip()!r}") from None
