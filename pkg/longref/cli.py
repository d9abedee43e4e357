"""The ``lr`` command.

Exit codes: 0 success, 1 usage or parse error, 2 I/O error, 3 search budget
exceeded, 4 ``--assert-not-last`` triggered.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from longref.analyze import verify_structure
from longref.errors import BudgetExceededError, LongRefError
from longref.families.catalog import catalog, gap_check, unavailable_entries, write_catalog
from longref.families.extensions import merge_degree_one_pair
from longref.families.tables import TableFamilySpec, table_family
from longref.formats.dot import write_dot
from longref.formats.graph6 import write_graph6
from longref.formats.trace import dumps_trace
from longref.graph import Graph, degree_set
from longref.refine import REFINERS, distinguishing_iteration, get_refiner, iteration_number
from longref.search.enumerate import SearchBudget, SearchSpec
from longref.search.search import find_long_refinement
from longref.sources import (
    Graph6FileSource,
    Graph6Source,
    GraphSourceConfig,
    StringFamilySource,
    StringSource,
    TableSource,
)
from longref.strings import expand_family, extract_string, realize, render
from longref.sweep import is_last_iteration
from longref.utils import default_max_workers, get_logger, set_log_level

logger = get_logger(__name__)

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_BUDGET, EXIT_ASSERT = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _family_source(text: str) -> StringFamilySource:
    family, _, k = text.partition(":")
    return StringFamilySource(family=family, k=int(k or 0))


def _table_source(text: str) -> TableSource:
    parts = [int(x) for x in text.split(":")]
    if len(parts) not in (2, 3):
        raise argparse.ArgumentTypeError(f"expected TABLE:VARIANT[:K], got {text!r}")
    return TableSource(table=parts[0], variant=parts[1], k=parts[2] if len(parts) == 3 else 0)


def _degrees(text: str) -> list[int]:
    try:
        return sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated degrees, got {text!r}")


def _order_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B or N, got {text!r}")


def _add_sources(p: argparse.ArgumentParser):
    group = p.add_argument_group("graph input")
    group.add_argument("--g6", dest="sources", action="append", type=lambda s: Graph6Source(text=s),
                       metavar="GRAPH6", help='inline graph6, "-" for stdin')
    group.add_argument("--file", dest="sources", action="append", type=lambda s: Graph6FileSource(path=s),
                       metavar="PATH", help="first graph of a graph6 file")
    group.add_argument("--string", dest="sources", action="append", type=lambda s: StringSource(string=s),
                       metavar="LRSTRING", help="realize a long-refinement string")
    group.add_argument("--family", dest="sources", action="append", type=_family_source,
                       metavar="ID[:K]", help="member of a string family")
    group.add_argument("--table", dest="sources", action="append", type=_table_source,
                       metavar="T:V[:K]", help="member of a table family")


def _graphs(args, count: int) -> list[Graph]:
    sources: list[GraphSourceConfig] = args.sources or []
    if len(sources) != count:
        raise UsageError(f"expected {count} graph input(s), got {len(sources)}")
    return [s.instantiate() for s in sources]


def _emit_graph(g: Graph, fmt: str):
    if fmt == "dot":
        print(write_dot(g))
    elif fmt == "json":
        print(json.dumps({"n": g.n, "edges": list(g.edges()), "graph6": write_graph6(g)}))
    else:
        print(write_graph6(g))


# commands


def cmd_refine(args) -> int:
    (g,) = _graphs(args, 1)
    trace = get_refiner(args.engine).run(g)
    if args.format == "json":
        print(json.dumps({
            "n": g.n,
            "iteration_number": trace.iteration_number,
            "long_refinement": g.n > 0 and trace.iteration_number == g.n - 1,
        }))
    elif args.format == "dot":
        print(write_dot(g, trace.final))
    else:
        print(f"iteration_number {trace.iteration_number}")
    if args.trace:
        sys.stdout.write(dumps_trace(trace))
    return EXIT_OK


def cmd_analyze(args) -> int:
    (g,) = _graphs(args, 1)
    report = verify_structure(g)
    if args.format == "json":
        print(report.model_dump_json(indent=2))
    else:
        print(report.render())
    if degree_set(g) == (1, 3) and sum(d == 1 for d in g.degrees()) == 2:
        try:
            merged = merge_degree_one_pair(g)
            print(f"joining the degree-1 vertices gives {iteration_number(merged)} iterations on {merged.n} vertices")
        except ValueError as e:
            logger.info(f"no degree-1 merge: {e}")
    return EXIT_OK


def cmd_distinguish(args) -> int:
    g, h = _graphs(args, 2)
    it = distinguishing_iteration(g, h)
    print("equivalent" if it is None else it)
    if args.assert_not_last and is_last_iteration(g, h, it):
        print(f"distinguished only in the last iteration {it}", file=sys.stderr)
        return EXIT_ASSERT
    return EXIT_OK


def cmd_string(args) -> int:
    if args.value is None and args.action != "extract":
        raise UsageError(f"string {args.action} needs a value")
    if args.action == "realize":
        realized = realize(args.value)
        _emit_graph(realized.graph, args.format)
        print(verify_structure(realized.graph).render(), file=sys.stderr)
    elif args.action == "extract":
        if args.value is not None:
            args.sources = [Graph6Source(text=args.value), *(args.sources or [])]
        (g,) = _graphs(args, 1)
        print(render(extract_string(g)))
    else:
        s = expand_family(args.value, args.k)
        if args.format == "string":
            print(render(s))
        else:
            _emit_graph(realize(s).graph, args.format)
    return EXIT_OK


def cmd_family(args) -> int:
    if args.table is not None:
        if args.variant is None:
            raise UsageError("--table needs --variant")
        g = table_family(TableFamilySpec(table=args.table, variant=args.variant, parameter=args.k))
    elif args.string_family is not None:
        g = realize(expand_family(args.string_family, args.k)).graph
    else:
        raise UsageError("give --table or --string-family")
    _emit_graph(g, args.format)
    return EXIT_OK


def cmd_catalog(args) -> int:
    lo, hi = args.order
    entries = catalog(lo, hi, args.degrees, max_workers=args.workers)
    if args.out:
        graphs_path, sidecar = write_catalog(entries, args.out)
        print(f"wrote {len(entries)} graphs to {graphs_path} and {sidecar}", file=sys.stderr)
    elif args.format == "json":
        print(json.dumps([e.to_record().model_dump() for e in entries], indent=2))
    else:
        for e in entries:
            print(f"{write_graph6(e.graph)}\t{e.provenance.label}")
    for item in unavailable_entries(args.degrees):
        print(f"unavailable: {item['id']} ({item['reason']})", file=sys.stderr)
    return EXIT_OK


def cmd_search(args) -> int:
    spec = SearchSpec(n=args.n, degrees=tuple(args.degrees), connected=not args.disconnected)
    budget = SearchBudget(max_nodes=args.max_nodes, max_seconds=args.max_seconds)
    try:
        hits = find_long_refinement(spec, budget, max_workers=args.workers)
    except BudgetExceededError as e:
        for hit in e.partial or []:
            print(hit.canonical)
        print(f"# budget exceeded after {budget.nodes} nodes: {len(e.partial or [])} partial results",
              file=sys.stderr)
        return EXIT_BUDGET
    for hit in hits:
        print(hit.canonical)
    degrees = ",".join(map(str, spec.degrees))
    print(f"# n={spec.n} degrees={degrees} found={len(hits)} nodes={budget.nodes}", file=sys.stderr)
    return EXIT_OK


def cmd_gap_check(args) -> int:
    gaps = gap_check(args.max_order, args.degrees)
    orders = [n for n, _ in gaps]
    if args.modulus:
        orders = [n for n in orders if n % args.modulus in args.residues]
    if args.format == "json":
        print(json.dumps({"degrees": args.degrees, "gaps": orders}))
    else:
        print(" ".join(map(str, orders)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lr", description="Colour Refinement traces and long-refinement graphs")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("refine", help="run Colour Refinement")
    _add_sources(p)
    p.add_argument("--engine", choices=sorted(REFINERS), default="worklist")
    p.add_argument("--trace", action="store_true", help="also print the trace as JSON lines")
    p.add_argument("--format", choices=["table", "json", "dot"], default="table")
    p.set_defaults(func=cmd_refine)

    p = sub.add_parser("analyze", help="pair phase and structure checks")
    _add_sources(p)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("distinguish", help="first iteration separating two graphs")
    _add_sources(p)
    p.add_argument("--assert-not-last", action="store_true",
                   help="exit 4 if the graphs are first separated in iteration n - 1")
    p.set_defaults(func=cmd_distinguish)

    p = sub.add_parser("string", help="long-refinement strings")
    p.add_argument("action", choices=["realize", "extract", "family"])
    p.add_argument("value", nargs="?", help="string to realize, graph6 to extract from, or family id")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--format", choices=["graph6", "dot", "json", "string"], default="graph6")
    _add_sources(p)
    p.set_defaults(func=cmd_string)

    p = sub.add_parser("family", help="one member of a family")
    p.add_argument("--table", type=int)
    p.add_argument("--variant", type=int)
    p.add_argument("--string-family")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--format", choices=["graph6", "dot", "json"], default="graph6")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("catalog", help="classified graphs in an order range")
    p.add_argument("--order", type=_order_range, default=(1, 30), metavar="A..B")
    p.add_argument("--degrees", type=_degrees)
    p.add_argument("--out", help="write graph6 lines here and provenance JSON beside it")
    p.add_argument("--format", choices=["graph6", "json"], default="graph6")
    p.add_argument("--workers", type=int, default=default_max_workers())
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("search", help="exhaustive search for long-refinement graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degrees", type=_degrees, required=True)
    p.add_argument("--disconnected", action="store_true")
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--max-seconds", type=float)
    p.add_argument("--workers", type=int, default=default_max_workers())
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("gap-check", help="orders without a catalog graph")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--degrees", type=_degrees, default=[2, 3])
    p.add_argument("--modulus", type=int)
    p.add_argument("--residues", type=_degrees, default=[])
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_gap_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    set_log_level(logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except BudgetExceededError as e:
        print(f"lr: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as e:
        print(f"lr: {e}", file=sys.stderr)
        return EXIT_IO
    except (UsageError, LongRefError, ValueError, KeyError) as e:
        print(f"lr: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
