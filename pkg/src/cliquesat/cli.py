"""Command-line interface.

Exit codes: 0 success or confirmed, 1 property fails, 2 usage error,
3 internal limit hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .canon import canonical_form
from .formats import FormatError, parse_graphs, render, to_graph6
from .graph import Graph
from .patterns import CliquePattern
from .saturation import (
    build_extremal,
    certify_saturated,
    min_construction_order,
    sat_formula,
    theorem_n_bound,
)
from .search import DEFAULT_MAX_EDGES, compute_sat, enumerate_graphs
from .structure import DEFAULT_CAP, FAIL, ResidueError, audit, audit_all_packings

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _pattern(args) -> CliquePattern:
    try:
        return CliquePattern(args.p, args.q, args.t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _check_order(n: int, pat: CliquePattern) -> None:
    if n < pat.order():
        raise UsageError(f"n={n} is below the pattern order {pat.order()} of {pat}")


def _read_graph(args) -> Graph:
    try:
        text = Path(args.input).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {args.input}: {exc}") from None
    try:
        graphs = parse_graphs(text, args.format)
    except FormatError as exc:
        raise UsageError(f"cannot parse {args.input}: {exc}") from None
    if len(graphs) != 1:
        raise UsageError(f"{args.input} holds {len(graphs)} graphs; expected exactly one")
    g = graphs[0]
    if args.n is not None and g.n != args.n:
        raise UsageError(f"graph has order {g.n} but --n {args.n} was declared")
    return g


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")


def _kv(pairs: list[tuple[str, object]]) -> None:
    for key, value in pairs:
        if isinstance(value, bool):
            value = str(value).lower()
        sys.stdout.write(f"{key}: {value}\n")


def _pattern_doc(pat: CliquePattern) -> dict:
    return {"p": pat.p, "q": pat.q, "t": pat.t}


def cmd_construct(args) -> int:
    pat = _pattern(args)
    _check_order(args.n, pat)
    if args.n < min_construction_order(pat):
        raise UsageError(f"n={args.n} too small for the construction")
    g = build_extremal(args.n, pat)
    formula = sat_formula(args.n, pat)
    text = render(g, args.format)
    if args.output:
        Path(args.output).write_text(text)
    if args.json:
        _emit({
            "format": 1,
            "kind": "construct",
            "n": g.n,
            "pattern": _pattern_doc(pat),
            "edges": g.num_edges(),
            "sat_formula": formula,
            "below_bound": g.n <= theorem_n_bound(pat),
            "graph6": to_graph6(g) if g.n <= 62 else None,
        })
    else:
        if not args.output:
            sys.stdout.write(text)
        sys.stdout.write(f"n={g.n} edges={g.num_edges()} sat_formula={formula}\n")
    return EXIT_OK


def cmd_check(args) -> int:
    pat = _pattern(args)
    g = _read_graph(args)
    verdict = certify_saturated(g, pat, workers=args.workers)
    witness = None
    if args.witness or args.json:
        if verdict.embedding is not None:
            witness = {"embedding": verdict.embedding.as_lists()}
        elif verdict.non_edge is not None:
            witness = {"non_edge": list(verdict.non_edge)}
    if args.json:
        _emit({
            "format": 1,
            "kind": "check",
            "n": g.n,
            "edges": g.num_edges(),
            "pattern": _pattern_doc(pat),
            "free": verdict.free,
            "saturated": verdict.saturated,
            "below_bound": verdict.below_bound,
            "witness": witness,
        })
    else:
        pairs = [("n", g.n), ("edges", g.num_edges()), ("pattern", pat),
                 ("free", verdict.free), ("saturated", verdict.saturated),
                 ("below_bound", verdict.below_bound)]
        if args.witness and witness is not None:
            if "embedding" in witness:
                pairs.append(("witness", "embedding " + " ".join(
                    "{" + ",".join(map(str, part)) + "}" for part in witness["embedding"])))
            else:
                u, v = witness["non_edge"]
                pairs.append(("witness", f"non-edge {u}-{v}"))
        _kv(pairs)
    return EXIT_OK if verdict.saturated else EXIT_FAIL


def _search_kwargs(args) -> dict:
    return {"budget": args.budget, "max_edges": args.max_edges,
            "allow_large": args.allow_large, "workers": args.workers}


def _search_exit(report) -> int:
    if report.sat_value is not None:
        return EXIT_OK
    return EXIT_LIMIT if report.limit_hit else EXIT_FAIL


def cmd_satnum(args) -> int:
    pat = _pattern(args)
    _check_order(args.n, pat)
    report = compute_sat(args.n, pat, **_search_kwargs(args))
    if args.json:
        _emit(report.to_document(timing=args.timing))
    else:
        sys.stdout.write(report.summary(timing=args.timing))
    return _search_exit(report)


def cmd_verify_theorem(args) -> int:
    pat = _pattern(args)
    _check_order(args.n, pat)
    bound = theorem_n_bound(pat)
    if args.n <= bound:
        raise UsageError(f"n={args.n} must exceed the theorem bound {bound}")
    report = compute_sat(args.n, pat, **_search_kwargs(args))
    confirmed = report.matches_formula and report.uniqueness
    if report.limit_hit:
        verdict = f"FRONTIER REACHED m={report.frontier}"
    else:
        verdict = "THEOREM CONFIRMED" if confirmed else "THEOREM NOT CONFIRMED"
    if args.json:
        doc = report.to_document(timing=args.timing)
        doc["kind"] = "verify-theorem"
        doc["verdict"] = verdict
        doc["confirmed"] = confirmed
        _emit(doc)
    else:
        sys.stdout.write(verdict + "\n")
        sys.stdout.write(report.summary(timing=args.timing))
    if confirmed:
        return EXIT_OK
    return EXIT_LIMIT if report.limit_hit else EXIT_FAIL


def cmd_enumerate(args) -> int:
    if args.m > DEFAULT_MAX_EDGES and not args.allow_large:
        sys.stderr.write(f"error: m={args.m} exceeds {DEFAULT_MAX_EDGES}; pass --allow-large\n")
        return EXIT_LIMIT
    pat = None
    if args.p is not None or args.q is not None or args.t is not None:
        if None in (args.p, args.q, args.t, args.n):
            raise UsageError("filtering needs --n, --p, --q and --t together")
        pat = _pattern(args)
        _check_order(args.n, pat)
    support = args.support if args.support is not None else (args.n if args.n else 2 * args.m)
    if support > 62:
        raise UsageError("support above 62 vertices cannot be written as graph6")
    graphs = []
    for g in enumerate_graphs(support, args.m):
        if pat is not None:
            if g.n > args.n:
                continue
            g = g.pad(args.n)
            if not certify_saturated(g, pat).saturated:
                continue
        graphs.append(g)
    if args.json:
        doc = {"format": 1, "kind": "enumerate", "m": args.m, "support": support,
               "count": len(graphs), "graph6": [to_graph6(g) for g in graphs]}
        if pat is not None:
            doc.update({"n": args.n, "pattern": _pattern_doc(pat), "filter": "saturated"})
        _emit(doc)
    else:
        for g in graphs:
            sys.stdout.write(to_graph6(g) + "\n")
    return EXIT_OK


def cmd_analyze(args) -> int:
    pat = _pattern(args)
    g = _read_graph(args)
    try:
        if args.all_packings:
            reports = audit_all_packings(g, pat, cap=args.cap)
        else:
            reports = [audit(g, pat, cap=args.cap)]
    except ResidueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAIL
    failed = any(v.status == FAIL for r in reports for v in r.verdicts.values())
    if args.json:
        docs = [r.to_document() for r in reports]
        _emit(docs[0] if len(docs) == 1 else {"format": 1, "kind": "residue-set", "reports": docs})
    else:
        for k, r in enumerate(reports):
            if k:
                sys.stdout.write("---\n")
            sys.stdout.write(r.to_text())
        sys.stdout.write(f"result: {'FAIL' if failed else 'ALL CHECKS PASS'}\n")
    return EXIT_FAIL if failed else EXIT_OK


def _add_pattern(sp, required: bool = True) -> None:
    sp.add_argument("--p", type=int, required=required)
    sp.add_argument("--q", type=int, required=required)
    sp.add_argument("--t", type=int, required=required)


def _add_search(sp) -> None:
    sp.add_argument("--budget", type=int, default=None,
                    help="highest edge count to scan (default: construction size)")
    sp.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
    sp.add_argument("--allow-large", action="store_true", help="lift the edge-count guard")
    sp.add_argument("--timing", action="store_true", help="include wall-clock seconds")
    sp.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliquesat", description=(
        "Saturation numbers and minimum saturated graphs for K_p + (t-1)K_q."))
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--workers", type=int, default=1)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("construct", help="emit the extremal construction")
    sp.add_argument("--n", type=int, required=True)
    _add_pattern(sp)
    sp.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    sp.add_argument("--output")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("check", help="certify saturation of a graph file")
    sp.add_argument("--input", required=True)
    sp.add_argument("--n", type=int, default=None, help="declared order")
    _add_pattern(sp)
    sp.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    sp.add_argument("--witness", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("satnum", help="compute sat(n) by exhaustive search")
    sp.add_argument("--n", type=int, required=True)
    _add_pattern(sp)
    _add_search(sp)
    sp.set_defaults(func=cmd_satnum)

    sp = sub.add_parser("verify-theorem", help="search and compare with the construction")
    sp.add_argument("--n", type=int, required=True)
    _add_pattern(sp)
    _add_search(sp)
    sp.set_defaults(func=cmd_verify_theorem)

    sp = sub.add_parser("enumerate", help="list m-edge classes, optionally only saturated ones")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--support", type=int, default=None)
    sp.add_argument("--n", type=int, default=None)
    _add_pattern(sp, required=False)
    sp.add_argument("--allow-large", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("analyze", help="residue report and structural checks")
    sp.add_argument("--input", required=True)
    sp.add_argument("--n", type=int, default=None)
    _add_pattern(sp)
    sp.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.add_argument("--all-packings", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_analyze)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.workers < 1:
        parser.error("--workers must be at least 1")
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
