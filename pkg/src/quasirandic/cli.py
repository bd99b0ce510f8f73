"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 malformed
graph6 input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from contextlib import contextmanager
from typing import IO, Iterator, Sequence

from . import graph6
from .bounds import CASE_IDS, RegimeError, TheoremCase, bound_value, exact_bound_value
from .constructions import KINDS, FamilyError, FamilySpec, standard_graph
from .graph import GraphError, is_connected
from .indices import DEFAULT_TOLERANCE, ExponentError, check_alpha, general_randic_edge, zeroth_order_general_randic
from .quasitree import tree_deletion_number

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 3

THEOREM_ALIASES = {
    "T1": ("T1_min_neg",),
    "T2": ("T2_max_neg",),
    "T3": ("T3_min_lin", "T3_max_lin"),
    "T4": ("T4_max_sup", "T4_min_sup"),
    "T5": ("T5_max_mid",),
    "T6": ("T6_min_mid",),
}
LEMMA_CHOICES = ("L1", "L2", "L3", "L4", "L5", "L6", "L7", "KSTEP")


class UsageError(Exception):
    pass


def _alpha(text: str) -> float:
    try:
        return check_alpha(float(text))
    except (ValueError, ExponentError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _theorem_cases(name: str) -> tuple[str, ...]:
    if name in THEOREM_ALIASES:
        return THEOREM_ALIASES[name]
    if name in CASE_IDS:
        return (name,)
    raise UsageError(f"unknown theorem {name!r}; use T1..T6, a case id ({', '.join(CASE_IDS)}) or a lemma id")


@contextmanager
def _open_graph6(path: str | None) -> Iterator[IO[str]]:
    if path is None:
        raise UsageError("--graph6 is required (a file path, or - for standard input)")
    if path == "-":
        yield sys.stdin
        return
    try:
        fh = open(path, encoding="ascii", errors="surrogateescape")
    except OSError as exc:
        raise UsageError(f"cannot open {path}: {exc.strerror}") from None
    with fh:
        yield fh


def _read_graphs(path: str | None) -> list:
    with _open_graph6(path) as fh:
        return list(graph6.read_file(fh))


def _emit(rows: list[dict], fmt: str, out: IO[str], key: str = "results") -> None:
    if fmt == "csv":
        fields: list[str] = []
        for row in rows:
            fields += [f for f in row if f not in fields]
        w = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else ("" if v is None else v)
                        for k, v in row.items()})
    else:
        out.write(json.dumps({key: rows}, indent=2) + "\n")


def cmd_index(args, out: IO[str]) -> int:
    rows = []
    for lineno, G in enumerate(_read_graphs(args.graph6), 1):
        code = graph6.encode(G)
        for a in args.alpha:
            row = {"line": lineno, "graph6": code, "n": G.n, "m": G.m, "alpha": a}
            try:
                row["zeroth_order_randic"] = zeroth_order_general_randic(G, a)
            except ZeroDivisionError:
                row["zeroth_order_randic"] = None
                row["error"] = "isolated vertex with alpha < 0"
            if args.edge:
                row["general_randic"] = general_randic_edge(G, a) if G.m or a > 0 else 0.0
            rows.append(row)
    _emit(rows, args.format, out)
    return EXIT_OK


def cmd_recognize(args, out: IO[str]) -> int:
    rows = []
    for lineno, G in enumerate(_read_graphs(args.graph6), 1):
        row = {"line": lineno, "graph6": graph6.encode(G), "n": G.n, "m": G.m, "connected": is_connected(G)}
        if G.n >= 2 and row["connected"]:
            cls = tree_deletion_number(G)
            row.update(k=cls.k, admissible=cls.admissible, witnesses=[list(S) for S in cls.witnesses])
        else:
            row.update(k=None, admissible=False, witnesses=[])
        rows.append(row)
    _emit(rows, args.format, out)
    return EXIT_OK


def cmd_construct(args, out: IO[str]) -> int:
    tree = None
    if args.family == "join_tree":
        trees = _read_graphs(args.graph6)
        if len(trees) != 1:
            raise UsageError("join_tree reads exactly one tree from --graph6")
        tree = trees[0]
    G = standard_graph(FamilySpec(args.family, args.n, args.k, args.p, args.q, tree))
    if args.format == "graph6":
        out.write(graph6.encode(G) + "\n")
    else:
        _emit([{"family": args.family, "graph6": graph6.encode(G), "n": G.n, "m": G.m,
                "edges": [list(e) for e in G.edges()], "degrees": list(G.degrees())}], args.format, out)
    return EXIT_OK


def _need(args, *names: str) -> None:
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise UsageError(f"{args.theorem} needs {' '.join(missing)}")


def _alphas_for(case_id: str, alphas: list[float]) -> list[float]:
    # alpha = 1 is implied for the linear case
    return alphas or ([1.0] if case_id.endswith("_lin") else [])


def cmd_bound(args, out: IO[str]) -> int:
    _need(args, "n", "k")
    rows = []
    for cid in _theorem_cases(args.theorem):
        alphas = _alphas_for(cid, args.alpha)
        if not alphas:
            raise UsageError(f"{cid} needs at least one --alpha")
        for a in alphas:
            case = TheoremCase(cid, args.n, args.k, a)
            b = bound_value(case)
            row = {"case_id": cid, "n": case.n, "k": case.k, "alpha": a, "bound": b.value,
                   "family": b.family, "direction": b.direction, "iff": b.iff}
            if a == int(a):
                row["exact"] = str(exact_bound_value(case))
            rows.append(row)
    _emit(rows, args.format, out)
    return EXIT_OK


def _lemma_reports(args) -> list:
    from .verifier import lemmas, theorems

    name, tol, jobs = args.theorem, args.tolerance, args.jobs
    strict = not args.lenient
    alphas = args.alpha
    if name in ("L1", "L2", "L3", "L4", "L5", "L7") and not alphas:
        raise UsageError(f"{name} needs at least one --alpha")
    if name == "L1":
        _need(args, "n")
        return [theorems.verify_lemma1(args.n, a, tol, strict=strict) for a in alphas]
    if name == "L2":
        _need(args, "n")
        return [lemmas.verify_lemma2(args.n, a, tol, jobs=jobs) for a in alphas]
    if name == "L3":
        _need(args, "n", "k")
        return [lemmas.verify_lemma3(args.n, args.k, a, tol, jobs=jobs, strict=strict) for a in alphas]
    if name == "L4":
        return [lemmas.verify_lemma4(a) for a in alphas]
    if name == "L5":
        _need(args, "n")
        return [lemmas.verify_lemma5(args.n, a, tol, jobs=jobs) for a in alphas]
    if name == "L6":
        _need(args, "n", "k")
        return [lemmas.verify_lemma6(args.n, args.k, jobs=jobs)]
    if name == "L7":
        return [lemmas.verify_lemma7(a, tolerance=tol) for a in alphas]
    _need(args, "n")
    return [lemmas.verify_deletion_step(args.n, jobs=jobs)]


def cmd_verify(args, out: IO[str]) -> int:
    from .verifier import reports_to_csv, reports_to_json, verify_theorem

    if args.theorem in LEMMA_CHOICES:
        if args.graph6 is not None:
            raise UsageError("--graph6 input is only used by theorem verification")
        reports = _lemma_reports(args)
    else:
        _need(args, "n", "k")
        graphs = _read_graphs(args.graph6) if args.graph6 is not None else None
        reports = []
        for cid in _theorem_cases(args.theorem):
            alphas = _alphas_for(cid, args.alpha)
            if not alphas:
                raise UsageError(f"{cid} needs at least one --alpha")
            for a in alphas:
                case = TheoremCase(cid, args.n, args.k, a)
                reports.append(verify_theorem(case, args.tolerance, graphs=graphs, jobs=args.jobs,
                                              strict=not args.lenient))
    out.write(reports_to_csv(reports) if args.format == "csv" else reports_to_json(reports) + "\n")
    for r in reports:
        print(r.summary(), file=sys.stderr)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_enumerate(args, out: IO[str]) -> int:
    from .verifier.enumeration import enumerate_connected_graphs, enumerate_labeled_trees
    from .verifier.population import Population

    if args.trees:
        graphs = enumerate_labeled_trees(args.n)
    elif args.k is not None:
        graphs = Population.enumerate(args.n, args.k, args.jobs).all_graphs()
    else:
        graphs = enumerate_connected_graphs(args.n, args.jobs)
    if args.count:
        _emit([{"n": args.n, "k": args.k, "trees": args.trees, "count": sum(1 for _ in graphs)}],
              "csv" if args.format == "csv" else "json", out)
    elif args.format == "graph6":
        graph6.write_lines(graphs, out)
    else:
        _emit([{"graph6": graph6.encode(G)} for G in graphs], args.format, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="quasirandic",
        description="Zeroth-order general Randic index on k-generalized quasi trees.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt_default="json", graph6_fmt=False):
        choices = ["json", "csv"] + (["graph6"] if graph6_fmt else [])
        sp.add_argument("--format", choices=choices, default=fmt_default)

    sp = sub.add_parser("index", help="index values of graphs read as graph6")
    sp.add_argument("--alpha", type=_alpha, action="append", required=True, help="exponent (repeatable)")
    sp.add_argument("--graph6", metavar="PATH", help="graph6 file, or - for standard input")
    sp.add_argument("--edge", action="store_true", help="also report the edge-based general Randic index")
    common(sp)
    sp.set_defaults(func=cmd_index)

    sp = sub.add_parser("recognize", help="tree-deletion number and minimum witnesses")
    sp.add_argument("--graph6", metavar="PATH", help="graph6 file, or - for standard input")
    common(sp)
    sp.set_defaults(func=cmd_recognize)

    sp = sub.add_parser("construct", help="build a named family member")
    sp.add_argument("--family", choices=KINDS, required=True)
    sp.add_argument("--n", type=_positive_int)
    sp.add_argument("--k", type=_positive_int)
    sp.add_argument("--p", type=_positive_int)
    sp.add_argument("--q", type=_positive_int)
    sp.add_argument("--graph6", metavar="PATH", help="tree for join_tree (file or -)")
    common(sp, "graph6", graph6_fmt=True)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("bound", help="closed-form bound and its extremal family")
    sp.add_argument("--theorem", required=True, help="T1..T6 or a case id")
    sp.add_argument("--n", type=_positive_int)
    sp.add_argument("--k", type=_positive_int)
    sp.add_argument("--alpha", type=_alpha, action="append", default=[])
    common(sp)
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("verify", help="exhaustive check of a theorem or lemma")
    sp.add_argument("--theorem", required=True, help=f"T1..T6, a case id, or one of {', '.join(LEMMA_CHOICES)}")
    sp.add_argument("--n", type=_positive_int)
    sp.add_argument("--k", type=_positive_int)
    sp.add_argument("--alpha", type=_alpha, action="append", default=[])
    sp.add_argument("--graph6", metavar="PATH", help="check these graphs instead of the internal enumeration")
    sp.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE,
                    help="relative tolerance (default from QUASIRANDIC_TOLERANCE, else 1e-9)")
    sp.add_argument("--jobs", type=_positive_int, default=1)
    sp.add_argument("--lenient", action="store_true", help="decide near-ties by tolerance alone")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("enumerate", help="list connected graphs, members of T_k(n), or labelled trees")
    sp.add_argument("--n", type=_positive_int, required=True)
    sp.add_argument("--k", type=_positive_int)
    sp.add_argument("--trees", action="store_true")
    sp.add_argument("--count", action="store_true", help="print only the number of graphs")
    sp.add_argument("--jobs", type=_positive_int, default=1)
    common(sp, "graph6", graph6_fmt=True)
    sp.set_defaults(func=cmd_enumerate)
    return p


def main(argv: Sequence[str] | None = None, out: IO[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "tolerance", None) is not None and not (math.isfinite(args.tolerance) and args.tolerance >= 0):
        print("quasirandic: error: --tolerance must be a finite non-negative number", file=sys.stderr)
        return EXIT_USAGE
    out = sys.stdout if out is None else out
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except graph6.Graph6Error as exc:
        print(f"quasirandic: malformed graph6: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (UsageError, RegimeError, FamilyError, GraphError, ValueError) as exc:
        print(f"quasirandic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
