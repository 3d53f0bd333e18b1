"""Command-line front end.

Exit codes: 0 success, 1 usage or validation error, 2 verification failure,
3 inconclusive search.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .analysis import girth, verify_hamiltonian_bipartite
from .catalog import (
    Catalog,
    Status,
    default_catalog_path,
    entry_from_outcome,
    fill_min_order,
    probe_family,
    render_table,
    summary_table,
)
from .d3core import build_graph
from .errors import CatalogError, HbgError
from .notation import FORMATS, emit_graph, parse_d3, parse_int_list
from .search import Mode, SearchProblem, Verdict, default_jobs, search

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_range(text: str, default_step: int = 1) -> list[int]:
    """``start:end[:step]`` (inclusive), a comma list, or a single integer."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) not in (2, 3):
            raise UsageError(f"bad range {text!r}; expected start:end[:step]")
        try:
            start, end = int(parts[0]), int(parts[1])
            step = int(parts[2]) if len(parts) == 3 and parts[2] else default_step
        except ValueError:
            raise UsageError(f"bad range {text!r}") from None
        if step <= 0 or end < start:
            raise UsageError(f"empty or descending range {text!r}")
        return list(range(start, end + 1, step))
    try:
        return parse_int_list(text)
    except HbgError as exc:
        raise UsageError(str(exc)) from None


def _load(args) -> Catalog:
    return Catalog.load(args.catalog)


def cmd_build(args) -> int:
    spec = parse_d3(args.d3, args.order, args.sf)
    graph = build_graph(spec)
    report = girth(graph)
    ok = verify_hamiltonian_bipartite(graph) and report.girth % 2 == 0 and len(report.witness_cycle) == report.girth
    sys.stdout.write(emit_graph(graph, args.emit))
    yes = "yes" if ok else "no"
    print(f"order={spec.order} sf={spec.sym_factor} girth={report.girth} bipartite={yes} hamiltonian={yes}",
          file=sys.stderr)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_search(args) -> int:
    mode = Mode.COUNT_ALL if args.count_all else Mode.FIRST_WITNESS
    problem = SearchProblem(args.order, args.sf, args.girth, args.budget, mode, exact=not args.at_least)
    out = search(problem, jobs=args.jobs, rotation_pruning=args.accelerate)
    print(out.summary())
    if out.verdict is Verdict.FOUND:
        graph = build_graph(out.witness)
        if not verify_hamiltonian_bipartite(graph) or girth(graph).girth != out.witness_girth:
            print("witness failed re-verification", file=sys.stderr)
            return EXIT_VERIFY
    if not args.no_catalog:
        store = _load(args)
        store.record(entry_from_outcome(out))
        store.save(args.catalog)
    return EXIT_INCONCLUSIVE if out.verdict is Verdict.INCONCLUSIVE else EXIT_OK


def cmd_sweep(args) -> int:
    store = _load(args)
    code = EXIT_OK
    for b in parse_range(args.sf):
        entries = fill_min_order(store, args.girth, b, args.max_order, args.budget, args.jobs)
        found = next((e for e in entries if e.status is Status.FOUND), None)
        unsure = any(e.status is Status.INCONCLUSIVE for e in entries)
        if found is not None and not unsure:
            print(f"g={args.girth} sf={b} min_order={found.order} d3={','.join(map(str, found.witness))}")
        elif found is not None:
            print(f"g={args.girth} sf={b} min_order<={found.order} (inconclusive below)")
        elif unsure:
            print(f"g={args.girth} sf={b} INCONCLUSIVE up to {args.max_order}")
        else:
            print(f"g={args.girth} sf={b} NONEXISTENT up to {args.max_order}")
        if unsure:
            code = EXIT_INCONCLUSIVE
    store.save(args.catalog)
    return code


def cmd_family(args) -> int:
    chords = parse_int_list(args.d3)
    orders = parse_range(args.orders, default_step=2 * args.sf)
    probe = probe_family(chords, args.sf, orders, args.girth)
    sys.stdout.write(probe.report())
    print(f"{len(probe.passing)}/{len(probe.results)} orders give girth {args.girth}", file=sys.stderr)
    return EXIT_OK if probe.all_pass else EXIT_VERIFY


def cmd_table(args) -> int:
    store = _load(args)
    sfs = parse_range(args.sf)
    for b in sfs:
        fill_min_order(store, args.girth, b, args.max_order, args.budget, args.jobs)
    store.save(args.catalog)
    cells = summary_table(store, args.girth, sfs, args.max_order)
    sys.stdout.write(render_table(cells, args.girth, args.max_order, args.format))
    return EXIT_INCONCLUSIVE if any(c.kind == "inconclusive" for c in cells) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--catalog", default=str(default_catalog_path()),
                        help="catalog TSV path (default: $HBGCAT_CATALOG or ./catalog.tsv)")
    common.add_argument("--jobs", type=int, default=default_jobs(), help="worker processes (default: all cores)")
    common.add_argument("-q", "--quiet", action="store_true", help="suppress progress on stderr")

    parser = argparse.ArgumentParser(prog="hbgcat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="build a graph from a D3 spec")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--sf", type=int, required=True)
    p.add_argument("--d3", required=True, help="comma- or space-separated chord indices")
    p.add_argument("--emit", choices=FORMATS, default="adjacency")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("search", parents=[common], help="search one (girth, order, sf) cell")
    p.add_argument("--girth", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--sf", type=int, required=True)
    p.add_argument("--budget", type=int, default=None, help="max fully expanded candidates")
    p.add_argument("--count-all", action="store_true", help="count every qualifying tuple")
    p.add_argument("--at-least", action="store_true", help="accept girth >= target instead of exactly target")
    p.add_argument("--accelerate", action="store_true",
                   help="skip non-minimal chord rotations while looking for a witness")
    p.add_argument("--no-catalog", action="store_true", help="do not append the result to the catalog")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("sweep", parents=[common], help="minimum order per symmetry factor")
    p.add_argument("--girth", type=int, required=True)
    p.add_argument("--sf", required=True, help="symmetry factor or range start:end")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("family", parents=[common], help="girth of one chord tuple over many orders")
    p.add_argument("--d3", required=True)
    p.add_argument("--sf", type=int, required=True)
    p.add_argument("--orders", required=True, help="start:end[:step], default step 2*sf")
    p.add_argument("--girth", type=int, required=True)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("table", parents=[common], help="minimum-order summary table")
    p.add_argument("--girth", type=int, required=True)
    p.add_argument("--sf", required=True, help="range start:end or comma list")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--format", choices=("text", "tsv"), default="text")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO, stream=sys.stderr,
                        format="%(message)s")
    if args.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except CatalogError as exc:
        print(f"catalog verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (HbgError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
