"""Command-line front end.

Exit codes: 0 success or affirmative answer, 1 negative answer, 2 error.
Reports go to stdout (or ``--out``); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .endvertex import (
    decide_end_vertex_atfree_bigraph,
    decide_end_vertex_oracle,
    end_vertex_set_atfree_bigraph,
)
from .errors import LexsearchError
from .gadgets import (
    build_G,
    build_G_from_sat,
    certify_bev_reduction,
    certify_sat_reduction,
    reduce_bev_to_ev,
)
from .graph import (
    Graph,
    bfs_layers,
    deep_components,
    find_odd_cycle,
    is_connected,
)
from .graphio import format_dot, format_graph, format_ordering, read_graph
from .lbfs import (
    TiePolicy,
    end_vertex_set_oracle,
    enumerate_lbfs_orderings,
    lbfs,
    verify_lbfs_ordering,
)
from .sat import parse_dimacs
from .structure import find_asteroidal_triple, is_admissible

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


class _Failure(Exception):
    pass


def _load_graph(path: str) -> Graph:
    try:
        return read_graph(path)
    except OSError as exc:
        raise _Failure(f"cannot read graph file {path}: {exc.strerror or exc}") from None


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _as_text(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if isinstance(value, (list, dict)):
            value = json.dumps(value)
        elif value is None:
            value = "-"
        elif isinstance(value, bool):
            value = str(value).lower()
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _render(args, report: dict) -> str:
    return _dump(report) if args.format == "json" else _as_text(report)


def cmd_lbfs(args) -> int:
    g = _load_graph(args.graph)
    start = g.vertex(args.start) if args.start is not None else None
    policy = TiePolicy.parse(args.tie, args.seed)
    order = lbfs(g, start, policy)
    if args.format == "json":
        report = {"order": list(order), "end_vertex": order.end_vertex if len(order) else None,
                  "start": order.start if len(order) else None, "policy": str(policy)}
        _emit(args, _dump(report))
    else:
        _emit(args, format_ordering(order))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    if args.order is not None:
        text = args.order
    else:
        try:
            text = Path(args.order_file).read_text()
        except OSError as exc:
            raise _Failure(f"cannot read ordering file {args.order_file}: {exc.strerror or exc}") from None
    sigma = [g.vertex(tok) for tok in text.split()]
    result = verify_lbfs_ordering(g, sigma)
    report = {"order": sigma, "lbfs_ordering": result.ok, "first_violation": result.position}
    _emit(args, _render(args, report))
    return EXIT_OK if result.ok else EXIT_NO


def cmd_enumerate(args) -> int:
    g = _load_graph(args.graph)
    start = g.vertex(args.start) if args.start is not None else None
    orders = []
    for i, order in enumerate(enumerate_lbfs_orderings(g, start, args.cap)):
        if args.limit is not None and i >= args.limit:
            break
        orders.append(list(order))
    if args.format == "json":
        ends = sorted({o[-1] for o in orders}) if orders else []
        _emit(args, _dump({"count": len(orders), "truncated": args.limit is not None and len(orders) == args.limit,
                           "orderings": orders, "end_vertices": ends}))
    else:
        _emit(args, "\n".join(format_ordering(o) for o in orders))
    return EXIT_OK


def cmd_endvertex(args) -> int:
    g = _load_graph(args.graph)
    v = g.vertex(args.vertex)
    if args.method == "characterization":
        verdict = decide_end_vertex_atfree_bigraph(g, v)
    else:
        verdict = decide_end_vertex_oracle(g, v, args.cap)
    _emit(args, _render(args, verdict.to_json()))
    return EXIT_OK if verdict.decision else EXIT_NO


def analyze_report(g: Graph, cap: int | None = None) -> dict:
    connected = is_connected(g) and g.vertex_count > 0
    cycle = find_odd_cycle(g)
    at = find_asteroidal_triple(g)
    per_vertex = []
    eccs = []
    for v in g.vertices:
        entry = {"vertex": v, "name": g.name(v), "admissible": is_admissible(g, v)[0]}
        if connected:
            ecc = bfs_layers(g, v).eccentricity
            eccs.append(ecc)
            entry["ecc"] = ecc
            entry["deep_components"] = len(deep_components(g, v))
        per_vertex.append(entry)
    report = {
        "vertices": g.vertex_count,
        "edges": g.edge_count,
        "connected": connected,
        "bipartite": cycle is None,
        "odd_cycle": list(cycle) if cycle else None,
        "at_free": at is None,
        "asteroidal_triple": at.to_json() if at else None,
        "proper_interval_bigraph": cycle is None and at is None,
        "diameter": max(eccs) if connected else None,
        "per_vertex": per_vertex,
        "end_vertex_set": None,
        "end_vertex_method": None,
    }
    if connected and cycle is None and at is None:
        report["end_vertex_set"] = sorted(end_vertex_set_atfree_bigraph(g))
        report["end_vertex_method"] = "characterization"
    elif cap is not None and g.vertex_count <= cap:
        report["end_vertex_set"] = sorted(end_vertex_set_oracle(g, cap))
        report["end_vertex_method"] = "oracle"
    return report


def cmd_analyze(args) -> int:
    g = _load_graph(args.graph)
    if g.vertex_count > args.max_vertices:
        raise _Failure(f"graph has {g.vertex_count} vertices; analyze is limited to "
                       f"{args.max_vertices} (raise with --max-vertices)")
    _emit(args, _render(args, analyze_report(g, args.cap)))
    return EXIT_OK


def _emit_artifact(args, graph: Graph, landmarks: dict, extra: dict, certification: dict | None) -> int:
    if args.format == "json":
        report = {"vertices": graph.vertex_count, "edges": graph.edges(), "landmarks": landmarks, **extra}
        if certification is not None:
            report["certification"] = certification
        _emit(args, _dump(report))
    else:
        header = ""
        if certification is not None:
            header = "# certification: " + json.dumps(certification) + "\n"
        body = format_dot(graph) if args.format == "dot" else format_graph(graph)
        _emit(args, header + body)
    if certification is not None and not certification["agree"]:
        return EXIT_NO
    return EXIT_OK


def cmd_reduce(args) -> int:
    if args.kind == "gadget":
        art = build_G(args.n)
        return _emit_artifact(args, art.graph, art.landmarks, {"root": art.root}, None)
    if args.kind == "sat2graph":
        try:
            text = Path(args.input).read_text()
        except OSError as exc:
            raise _Failure(f"cannot read CNF file {args.input}: {exc.strerror or exc}") from None
        inst = parse_dimacs(text, strict=args.strict)
        art = build_G_from_sat(inst)
        cert = certify_sat_reduction(inst, args.cap, label=args.input) if args.certify else None
        extra = {"root": art.root, "target": art.target}
        return _emit_artifact(args, art.graph, art.landmarks, extra, cert)
    g = _load_graph(args.input)
    if args.s is None or args.t is None:
        raise _Failure("bev2ev needs --s and --t")
    s, t = g.vertex(args.s), g.vertex(args.t)
    red = reduce_bev_to_ev(g, s, t)
    cert = certify_bev_reduction(g, s, t, args.cap) if args.certify else None
    landmarks = {red.graph.name(v): v for v in red.path}
    return _emit_artifact(args, red.graph, landmarks, {"target": red.target, "path": list(red.path)}, cert)


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lexsearch", description="LBFS orderings, end-vertices and SAT gadgets.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--cap", type=int, default=None,
                        help="vertex cap for exhaustive enumeration (default 40 or $LEXSEARCH_CAP)")

    def fmt(parser, choices=("text", "json"), default="text"):
        parser.add_argument("--format", choices=choices, default=default)

    q = sub.add_parser("lbfs", parents=[common], help="run one LBFS")
    q.add_argument("graph")
    q.add_argument("--start")
    q.add_argument("--tie", choices=["min", "max", "random"], default="min")
    q.add_argument("--seed", type=int, default=None)
    fmt(q)
    q.set_defaults(func=cmd_lbfs)

    q = sub.add_parser("verify", parents=[common], help="check whether an order is an LBFS ordering")
    q.add_argument("graph")
    src = q.add_mutually_exclusive_group(required=True)
    src.add_argument("--order", help="space-separated vertex ids or names")
    src.add_argument("--order-file")
    fmt(q)
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("enumerate", parents=[common], help="list every LBFS ordering (small graphs)")
    q.add_argument("graph")
    q.add_argument("--start")
    q.add_argument("--limit", type=int, default=None, help="stop after this many orderings")
    fmt(q)
    q.set_defaults(func=cmd_enumerate)

    q = sub.add_parser("endvertex", parents=[common], help="decide whether a vertex ends some LBFS")
    q.add_argument("graph")
    q.add_argument("--vertex", required=True)
    q.add_argument("--method", choices=["characterization", "oracle"], default="characterization")
    fmt(q, default="json")
    q.set_defaults(func=cmd_endvertex)

    q = sub.add_parser("analyze", parents=[common], help="structural report")
    q.add_argument("graph")
    q.add_argument("--max-vertices", type=int, default=2000)
    fmt(q, default="json")
    q.set_defaults(func=cmd_analyze)

    q = sub.add_parser("reduce", help="build hardness gadgets")
    rsub = q.add_subparsers(dest="kind", required=True)
    r = rsub.add_parser("sat2graph", parents=[common], help="3-CNF (DIMACS) to G_I")
    r.add_argument("input")
    r.add_argument("--strict", action=argparse.BooleanOptionalAction, default=True,
                   help="reject clause-count mismatches (default on)")
    r.add_argument("--certify", action="store_true", help="cross-check with brute-force SAT and the LBFS oracle")
    fmt(r, ("text", "json", "dot"))
    r.set_defaults(func=cmd_reduce)
    r = rsub.add_parser("bev2ev", parents=[common], help="beginning-end-vertex to end-vertex instance")
    r.add_argument("input")
    r.add_argument("--s", required=True)
    r.add_argument("--t", required=True)
    r.add_argument("--certify", action="store_true")
    fmt(r, ("text", "json", "dot"))
    r.set_defaults(func=cmd_reduce)
    r = rsub.add_parser("gadget", parents=[common], help="the rooted gadget G_n")
    r.add_argument("--n", type=int, required=True)
    fmt(r, ("text", "json", "dot"))
    r.set_defaults(func=cmd_reduce)
    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except (LexsearchError, _Failure) as exc:
        print(f"lexsearch: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"lexsearch: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
