"""Command-line front end: family generators, invariant and criticality
reports as JSON lines, exhaustive enumeration, and the verification suites.

Graphs travel as graph6, one per line.  Streams come from --file or stdin;
reports go to stdout, human summaries to stderr.  CDCRIT_THREADS overrides
the worker count used to profile large streams.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Iterable, Iterator

from .criticality import is_maximal_k_gc_vertex_critical
from .enumeration import enumerate_connected, enumerate_graphs, read_graph6_lines
from .errors import CapacityError, Graph6ParseError
from .generators import G2Params, gen_g1, gen_g2, gen_g3, gen_lemma_c1
from .graph import Graph, from_graph6, is_connected, to_graph6
from .invariants import compute_invariants
from .theorems import (
    THEOREM_IDS,
    check_theorem,
    explore_conjecture,
    profile_stream,
)


def _dump(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _input_graphs(args: argparse.Namespace) -> Iterator[Graph]:
    if getattr(args, "file", None):
        with open(args.file, "r", encoding="ascii") as handle:
            yield from read_graph6_lines(handle)
    else:
        yield from read_graph6_lines(sys.stdin)


def _stream_for_suite(args: argparse.Namespace) -> list[Graph]:
    if args.n is not None:
        graphs: list[Graph] = []
        for size in range(1, args.n + 1):
            graphs.extend(enumerate_connected(size))
        return graphs
    return list(_input_graphs(args))


def _cmd_gen(args: argparse.Namespace) -> int:
    family = args.family
    params = args.params
    if family == "g1":
        graph = gen_g1(int(params))
    elif family == "g2":
        numbers = [int(p) for p in params.split(",")]
        alpha, sizes = numbers[0], numbers[1:]
        graph = gen_g2(G2Params(alpha=alpha, w_sizes=tuple(sizes)))
    elif family == "g3":
        graph = gen_g3(int(params))
    else:  # c1
        graph = gen_lemma_c1(from_graph6(params))
    print(to_graph6(graph))
    return 0


def _cmd_invariants(args: argparse.Namespace) -> int:
    status = 0
    for graph in _input_graphs(args):
        g6 = to_graph6(graph)
        try:
            record = compute_invariants(graph)
        except ValueError as exc:
            print(_dump({"graph6": g6, "error": str(exc)}))
            status = 2
            continue
        print(_dump({"graph6": g6, **record.to_json_dict()}))
    return status


def _cmd_check_critical(args: argparse.Namespace) -> int:
    status = 0
    for graph in _input_graphs(args):
        g6 = to_graph6(graph)
        if not is_connected(graph) or graph.n == 0:
            print(_dump({"graph6": g6, "error": "graph is not connected"}))
            status = 2
            continue
        _, report = is_maximal_k_gc_vertex_critical(graph, args.k)
        print(_dump({"graph6": g6, **report.to_json_dict()}))
    return status


def _cmd_enumerate(args: argparse.Namespace) -> int:
    graphs = enumerate_connected(args.n) if args.connected else enumerate_graphs(args.n)
    if args.critical_k is not None:
        kept = []
        for graph in graphs:
            if not is_connected(graph):
                continue
            ok, _ = is_maximal_k_gc_vertex_critical(graph, args.critical_k)
            if ok:
                kept.append(graph)
        graphs = kept
    for graph in graphs:
        print(to_graph6(graph))
    return 0


def _print_summary_table(reports: Iterable) -> None:
    rows = [("suite", "checked", "violations", "equality", "result")]
    for report in reports:
        rows.append(
            (
                report.theorem_id,
                str(report.graphs_checked),
                str(len(report.violations)),
                str(len(report.equality_cases)),
                "ok" if report.passed else "VIOLATED",
            )
        )
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    for row in rows:
        line = "  ".join(cell.ljust(width) for cell, width in zip(row, widths))
        print(line.rstrip(), file=sys.stderr)


def _cmd_verify_theorems(args: argparse.Namespace) -> int:
    suites = list(THEOREM_IDS) if args.suite == "all" else [args.suite]
    stream = _stream_for_suite(args)
    profiles = profile_stream(stream)
    reports = []
    for suite in suites:
        report = check_theorem(profiles, suite)
        reports.append(report)
        for line in report.to_json_dicts():
            print(_dump(line))
    _print_summary_table(reports)
    return 0 if all(report.passed for report in reports) else 1


def _cmd_conjecture(args: argparse.Namespace) -> int:
    report = explore_conjecture(_stream_for_suite(args))
    for line in report.to_json_dicts():
        print(_dump(line))
    if report.passed:
        print("conjecture: consistent with the stream", file=sys.stderr)
    else:
        print("conjecture: INCONSISTENT members found (reported above)", file=sys.stderr)
    return 0  # findings are data, never a failure exit


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdcrit",
        description="Exact analysis of connected-domination-critical graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="emit one family member as graph6")
    p_gen.add_argument("--family", required=True, choices=["g1", "g2", "g3", "c1"])
    p_gen.add_argument(
        "--params",
        required=True,
        help=(
            "g1/g3: a single integer; g2: alpha followed by its block sizes, "
            "comma separated (e.g. 3,0,1,1); c1: the seed graph as graph6"
        ),
    )
    p_gen.set_defaults(func=_cmd_gen)

    p_inv = sub.add_parser("invariants", help="JSON-lines invariant records")
    p_inv.add_argument("--file", help="graph6 input file (default: stdin)")
    p_inv.set_defaults(func=_cmd_invariants)

    p_crit = sub.add_parser("check-critical", help="JSON-lines criticality reports")
    p_crit.add_argument("--k", type=int, default=3)
    p_crit.add_argument("--file", help="graph6 input file (default: stdin)")
    p_crit.set_defaults(func=_cmd_check_critical)

    p_enum = sub.add_parser("enumerate", help="graph6 lines, one per class")
    p_enum.add_argument("--n", type=int, required=True, help="vertex count (max 7)")
    p_enum.add_argument("--connected", action="store_true")
    p_enum.add_argument(
        "--critical-k", type=int, default=None, help="keep only graphs critical at k"
    )
    p_enum.set_defaults(func=_cmd_enumerate)

    p_ver = sub.add_parser("verify-theorems", help="run verification suites")
    p_ver.add_argument("--suite", default="all", choices=["all", *THEOREM_IDS])
    p_ver.add_argument(
        "--n", type=int, default=None, help="all connected graphs with at most N vertices"
    )
    p_ver.add_argument("--file", help="graph6 input file (default: stdin)")
    p_ver.set_defaults(func=_cmd_verify_theorems)

    p_conj = sub.add_parser("conjecture", help="explore the open conjecture")
    p_conj.add_argument(
        "--n", type=int, default=None, help="all connected graphs with at most N vertices"
    )
    p_conj.add_argument("--file", help="graph6 input file (default: stdin)")
    p_conj.set_defaults(func=_cmd_conjecture)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CapacityError, Graph6ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
