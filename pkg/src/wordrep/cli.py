"""Command-line interface.

Exit status: 0 on success or a verified match, 1 when ``check`` finds that the
word does not represent the graph, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import run_bench, write_csv
from .cycles import gen_cycle_word, orbit, reflect, rotate
from .enumeration import enumerate_representations
from .graph import Graph, parse_graph, serialize_graph
from .graphcheck import graph_check, graph_check_naive
from .svg import emit_svg
from .words import Word, alternation_graph

EXIT_MATCH, EXIT_MISMATCH, EXIT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_word(args: argparse.Namespace) -> Word:
    if args.word is not None:
        text = args.word
    else:
        text = _read_text(args.word_file or "-")
    return Word.parse(text, compact=args.compact)


def _load_graph(path: str) -> Graph:
    return parse_graph(_read_text(path))


def _add_word_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--word", help="word as whitespace-separated letters")
    src.add_argument("--word-file", help="file holding the word ('-' for stdin, the default)")
    p.add_argument("--compact", action="store_true", help="treat every character as one letter")


def cmd_check(args: argparse.Namespace) -> int:
    w = _load_word(args)
    g = _load_graph(args.graph)
    result = (graph_check_naive if args.naive else graph_check)(w, g)
    if args.json:
        doc = {
            "matches": result.matches,
            "edgecount": result.edgecount,
            "graph_edges": len(g.edges),
            "failing_edge": list(result.failing_edge) if result.failing_edge else None,
        }
        print(json.dumps(doc))
    else:
        print(f"matches: {str(result.matches).lower()}")
        print(f"edgecount: {result.edgecount}")
        print(f"graph_edges: {len(g.edges)}")
        if result.failing_edge:
            print(f"failing_edge: {result.failing_edge[0]} {result.failing_edge[1]}")
    return EXIT_MATCH if result.matches else EXIT_MISMATCH


def cmd_build_graph(args: argparse.Namespace) -> int:
    sys.stdout.write(serialize_graph(alternation_graph(_load_word(args))))
    return EXIT_MATCH


def cmd_gen_cycle(args: argparse.Namespace) -> int:
    w = gen_cycle_word(args.n)
    if args.reflect:
        w = reflect(w)
    print(rotate(w, args.rotation))
    return EXIT_MATCH


def cmd_orbit(args: argparse.Namespace) -> int:
    for w in orbit(args.n):
        print(w)
    return EXIT_MATCH


def cmd_enumerate(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    report = enumerate_representations(
        g,
        len(g.vertices),
        keep_words=args.list or args.json,
        allow_override=args.limit_override,
        workers=args.workers,
    )
    if args.json:
        print(report.to_json())
    else:
        text = report.to_text()
        if not args.list:
            text = text.split("words:\n", 1)[0]
        sys.stdout.write(text)
    return EXIT_MATCH


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        ns = [int(x) for x in args.n_list.split(",") if x.strip()]
    except ValueError as exc:
        raise InputError(f"bad --n-list: {args.n_list!r}") from exc
    if not ns or min(ns) < 4:
        raise InputError("--n-list needs values >= 4")
    records = run_bench(ns, repeats=args.repeats, naive_repeats=args.naive_repeats)
    if args.csv and args.csv != "-":
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            write_csv(records, fh)
    else:
        write_csv(records, sys.stdout)
    return EXIT_MATCH


def cmd_svg(args: argparse.Namespace) -> int:
    doc = emit_svg(_load_word(args))
    if args.output and args.output != "-":
        Path(args.output).write_text(doc, encoding="utf-8")
    else:
        sys.stdout.write(doc)
    return EXIT_MATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wordrep", description="2-uniform word representations of graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide whether a 2-uniform word represents a graph")
    _add_word_source(p)
    p.add_argument("graph", help="edge-list graph file ('-' for stdin)")
    p.add_argument("--naive", action="store_true", help="use the pairwise reference check (any word)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("build-graph", help="print the alternation graph of a word")
    _add_word_source(p)
    p.set_defaults(func=cmd_build_graph)

    p = sub.add_parser("gen-cycle", help="print the canonical word for C_n")
    p.add_argument("n", type=int)
    p.add_argument("--rotation", type=int, default=0, help="left cyclic shift applied last")
    p.add_argument("--reflect", action="store_true", help="reverse before rotating")
    p.set_defaults(func=cmd_gen_cycle)

    p = sub.add_parser("orbit", help="print the 4n words representing C_n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("enumerate", help="count all 2-uniform words on 1..n representing a graph")
    p.add_argument("graph")
    p.add_argument("--limit-override", action="store_true", help="allow n = 7")
    p.add_argument("--list", action="store_true", help="list the matching words")
    p.add_argument("--json", action="store_true")
    p.add_argument("--workers", type=int, default=None, help="worker processes (default: $WORDREP_WORKERS or CPU count)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("bench", help="time the Fenwick check against the quadratic baseline")
    p.add_argument("--n-list", default="10,100,1000", help="comma-separated vertex counts")
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--naive-repeats", type=int, default=None, help="repeats for the baseline (default: --repeats)")
    p.add_argument("--csv", default="-", help="output CSV path (default stdout)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("svg", help="write the chord diagram of a 2-uniform word")
    _add_word_source(p)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_svg)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
