"""Command-line interface: ``condogame {solve,family,gamma-c,isolate,verify,census}``.

Exit codes: 0 success, 1 suite violations, 2 usage or input errors,
3 node budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .domination import connected_domination_number
from .families import FamilyError, FamilySpec, make_family
from .game import BudgetExceeded, GameError, GameState, SolveContext, Turn, format_value
from .graph import GraphError, LabeledGraph, is_connected
from .io import ParseError, ResultRecord, encode_graph6, format_edgelist, parse_graph
from .isolation import IsolationConvention, x_isolation_line
from .verify import SUITES, Corpus, run_suite, sharpness_census

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", metavar="FILE", help="edge-list or graph6 file ('-' for stdin)")
    src.add_argument("--family", metavar="NAME:PARAMS", help="built-in family, e.g. H:6 or C2:1,3")
    p.add_argument("--format", choices=["auto", "edgelist", "graph6"], default="auto")


def _load(args) -> tuple[str, LabeledGraph]:
    try:
        if args.family:
            return args.family, make_family(args.family)
        data = sys.stdin.buffer.read() if args.graph == "-" else Path(args.graph).read_bytes()
        return args.graph, parse_graph(data, args.format)
    except (FamilyError, ParseError, GraphError, OSError) as exc:
        raise InputError(str(exc)) from None


def _vertex(lg: LabeledGraph, token: str) -> int:
    if token in lg.labels:
        return lg.labels[token]
    if token.isdigit() and int(token) < lg.graph.n:
        return int(token)
    raise InputError(f"unknown vertex {token!r}")


def _vertex_set(lg: LabeledGraph, text: str | None) -> int:
    if not text:
        return 0
    s = 0
    for token in text.split(","):
        s |= 1 << _vertex(lg, token.strip())
    return s


def cmd_solve(args) -> int:
    gid, lg = _load(args)
    g = lg.graph
    if not is_connected(g, g.all_vertices):
        raise InputError("graph is not connected")
    pre = _vertex_set(lg, args.predominate)
    first = Turn(args.first)
    ctx = SolveContext(g, pre, node_budget=args.budget, prune=args.prune)
    t0 = time.perf_counter()
    status, value = "ok", None
    try:
        value = format_value(ctx.solve(GameState(0, first)))
    except BudgetExceeded:
        status = "budget_exceeded"
    record = ResultRecord(gid, lg.names(pre), first.value, value, ctx.nodes, time.perf_counter() - t0, status)
    print(record.to_json())
    return EXIT_OK if status == "ok" else EXIT_BUDGET


def cmd_family(args) -> int:
    try:
        lg = make_family(args.spec)
    except FamilyError as exc:
        raise InputError(str(exc)) from None
    if args.format == "graph6":
        print(encode_graph6(lg.graph))
    else:
        sys.stdout.write(format_edgelist(lg))
    return EXIT_OK


def cmd_gamma_c(args) -> int:
    gid, lg = _load(args)
    try:
        value = connected_domination_number(lg.graph, _vertex_set(lg, args.predominate))
    except GameError as exc:
        raise InputError(str(exc)) from None
    print(json.dumps({"graph_id": gid, "gamma_c": value}))
    return EXIT_OK


def cmd_isolate(args) -> int:
    gid, lg = _load(args)
    x = _vertex(lg, args.x)
    line = x_isolation_line(
        lg.graph, x, Turn(args.first), Turn(args.player), IsolationConvention(args.convention)
    )
    out = {
        "graph_id": gid,
        "x": args.x,
        "first": args.first,
        "player": args.player,
        "convention": args.convention,
        "wins": line is not None,
        "line": [lg.name_of(v) for v in line] if line is not None else None,
    }
    print(json.dumps(out))
    return EXIT_OK


def _corpus(args) -> Corpus | None:
    try:
        if args.family:
            return Corpus.from_families(args.family)
        if args.corpus:
            return Corpus.from_graph6(args.corpus, max_order=args.max_order, trees=getattr(args, "trees", False))
    except (FamilyError, ParseError, OSError) as exc:
        raise InputError(str(exc)) from None
    return None


def cmd_verify(args) -> int:
    corpus = _corpus(args)
    if corpus is not None and not len(corpus):
        raise InputError("corpus is empty after filtering")
    report = run_suite(args.suite, corpus, jobs=args.jobs, node_budget=args.budget)
    print(report.to_json())
    return EXIT_OK if report.passed else EXIT_VIOLATIONS


def cmd_census(args) -> int:
    corpus = _corpus(args)
    if corpus is None:
        raise InputError("census needs --corpus or --family")
    census = sharpness_census(corpus, jobs=args.jobs, node_budget=args.budget)
    sys.stdout.write(census.to_tsv())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="condogame", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="game value from the empty position")
    _add_graph_args(p)
    p.add_argument("--predominate", metavar="LABELS", help="comma-separated vertex labels")
    p.add_argument("--first", choices=[t.value for t in Turn], default="dominator")
    p.add_argument("--budget", type=int, metavar="N", help="maximum expanded nodes")
    p.add_argument("--prune", action="store_true", help="discard dominated moves (no effect with predomination)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("family", help="emit a built-in family graph")
    p.add_argument("spec", metavar="NAME:PARAMS")
    p.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("gamma-c", help="connected domination number")
    _add_graph_args(p)
    p.add_argument("--predominate", metavar="LABELS")
    p.set_defaults(func=cmd_gamma_c)

    p = sub.add_parser("isolate", help="x-isolation game")
    _add_graph_args(p)
    p.add_argument("--x", required=True, metavar="LABEL")
    p.add_argument("--convention", choices=[c.value for c in IsolationConvention], default="predominated")
    p.add_argument("--first", choices=[t.value for t in Turn], default="staller")
    p.add_argument("--player", choices=[t.value for t in Turn], default="staller")
    p.set_defaults(func=cmd_isolate)

    for name, func in (("verify", cmd_verify), ("census", cmd_census)):
        p = sub.add_parser(name, help="run a claim suite" if name == "verify" else "sharpness census (TSV)")
        if name == "verify":
            p.add_argument("--suite", required=True, choices=sorted(SUITES))
        p.add_argument("--corpus", metavar="FILE", help="graph6 file, one graph per line")
        p.add_argument("--family", action="append", metavar="NAME:PARAMS", help="family instance (repeatable)")
        p.add_argument("--max-order", type=int)
        p.add_argument("--trees", action="store_true", help="keep only trees from the corpus")
        p.add_argument("--jobs", type=int, default=None, help="worker processes (default: all CPUs)")
        p.add_argument("--budget", type=int, metavar="N")
        p.set_defaults(func=func)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"condogame: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
