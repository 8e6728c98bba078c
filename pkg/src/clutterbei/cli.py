"""Command-line front end.

Exit codes: 0 success, 1 oracle disagreement, 2 unreadable or invalid input,
3 vertex budget exceeded, 4 invalid gluing, 5 apex already present,
6 random clutter unattainable.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import kernels
from .cliques import free_vertices, maximal_cliques
from .clutter import (
    Clutter,
    binomial_generators,
    cone,
    cut_points,
    dumps,
    generator_lines,
    is_clutter_cone,
    read_clutter,
    to_dict,
)
from .decide import cm_verdict, glue, graph_cone_apex
from .errors import (
    ClutterError,
    ComplexityGuard,
    GlueVertexNotFree,
    LabelCollision,
    Unattainable,
    UnknownVertex,
)
from .generate import random_clutter
from .oracle import MAX_ORACLE_VERTICES, minimal_primes_oracle
from .primes import MAX_ENUM_VERTICES, cut_sets, heights_histogram, is_unmixed

SCHEMA = 1


class OracleDisagreement(Exception):
    pass


def _set(C: Clutter, ids) -> list[str]:
    return C.sorted_labels(ids)


def _fmt(labels) -> str:
    return "{" + ",".join(labels) + "}"


def _records(C, args):
    return cut_sets(C, args.max_enum_vertices, args.threads)


def _check_oracle(C, records):
    if C.n > MAX_ORACLE_VERTICES:
        raise ComplexityGuard("oracle", C.n, MAX_ORACLE_VERTICES)
    mine = {(r.T, r.height) for r in records}
    theirs = {(d.T, d.height) for d in minimal_primes_oracle(C)}
    if mine != theirs:
        diff = sorted(_fmt(_set(C, T)) for T, _ in mine ^ theirs)
        raise OracleDisagreement("oracle disagrees with the cut-point criterion on " + " ".join(diff))


def build_report(C: Clutter, args) -> dict:
    records = _records(C, args)
    if args.oracle:
        _check_oracle(C, records)
    facets = maximal_cliques(C)
    apex = graph_cone_apex(C)
    verdict = cm_verdict(C, args.max_enum_vertices, args.threads)
    shown = records[: args.max_display]
    return {
        "schema": SCHEMA,
        "backend": kernels.BACKEND,
        "clutter": to_dict(C),
        "graph_edges": [list(e) for e in C.graph.edge_labels()],
        "generators": len(binomial_generators(C)),
        "facets": [_set(C, F) for F in facets],
        "free_vertices": _set(C, free_vertices(C, facets)),
        "cut_points": _set(C, cut_points(C)),
        "cone": None if apex is None else {"apex": apex.v, "literal": is_clutter_cone(C, apex.v)},
        "cut_sets": [
            {"T": _set(C, r.T), "c": r.c, "height": r.height, "dim": r.codim_dim} for r in shown
        ],
        "cut_sets_total": len(records),
        "minimal_primes": len(records),
        "heights": {str(h): k for h, k in heights_histogram(records).items()},
        "dim": verdict.dim,
        "unmixed": verdict.unmixed,
        "verdict": verdict.to_dict(),
    }


def _certificate_lines(verdict: dict, indent: int = 1) -> list[str]:
    out = []
    pad = "  " * indent
    for step in verdict["certificate"]:
        out.append(f"{pad}{step['rule']} {step['status']}: {step['detail']} [{step['result']}]")
        for child in step["children"]:
            out.append(f"{pad}  on {_fmt(child['vertices'])}: {child['status']}")
            out.extend(_certificate_lines(child, indent + 2))
    return out


def render_report(rep: dict) -> str:
    c = rep["clutter"]
    lines = [
        f"vertices: {' '.join(c['vertices'])}",
        f"edges: {' '.join(_fmt(e) for e in c['edges'])}",
        f"associated graph edges ({len(rep['graph_edges'])}): "
        + " ".join(f"{a}-{b}" for a, b in rep["graph_edges"]),
        f"binomial generators: {rep['generators']}" + (" (J = 0)" if rep["generators"] == 0 else ""),
        f"maximal cliques: {' '.join(_fmt(F) for F in rep['facets'])}",
        f"free vertices: {' '.join(rep['free_vertices']) or '-'}",
        f"cut points: {' '.join(rep['cut_points']) or '-'}",
    ]
    if rep["cone"]:
        lit = "yes" if rep["cone"]["literal"] else "no"
        lines.append(f"graph cone apex: {rep['cone']['apex']} (literal clutter cone: {lit})")
    else:
        lines.append("graph cone apex: -")
    lines.append(f"cut sets ({rep['cut_sets_total']}):")
    for r in rep["cut_sets"]:
        lines.append(f"  T={_fmt(r['T'])} c={r['c']} height={r['height']} dim={r['dim']}")
    if rep["cut_sets_total"] > len(rep["cut_sets"]):
        lines.append(f"  ... {rep['cut_sets_total'] - len(rep['cut_sets'])} more")
    v = rep["verdict"]
    depth = "unknown" if v["depth"] is None else v["depth"]
    lines += [
        f"minimal primes: {rep['minimal_primes']}",
        "heights: " + " ".join(f"{h}:{k}" for h, k in rep["heights"].items()),
        f"dim S/J: {rep['dim']}",
        f"unmixed: {'yes' if rep['unmixed'] else 'no'}",
        f"verdict: {v['status']} (depth {depth})",
        "certificate:",
    ]
    lines += _certificate_lines(v)
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> str:
    C = read_clutter(args.path)
    rep = build_report(C, args)
    return json.dumps(rep, indent=2) + "\n" if args.json else render_report(rep)


def cmd_minimal_primes(args) -> str:
    C = read_clutter(args.path)
    records = _records(C, args)
    if args.oracle:
        _check_oracle(C, records)
    g = C.graph
    rows = []
    for r in records:
        rest = C.full & ~sum(1 << i for i in r.T)
        parts = [_set(C, [i for i in range(C.n) if m >> i & 1]) for m in g.components(rest)]
        rows.append({"T": _set(C, r.T), "parts": parts, "height": r.height})
    if args.json:
        return json.dumps({"schema": SCHEMA, "minimal_primes": rows}, indent=2) + "\n"
    return "".join(
        f"T={_fmt(row['T'])} height={row['height']} parts={' '.join(_fmt(p) for p in row['parts'])}\n"
        for row in rows
    )


def cmd_unmixed(args) -> str:
    C = read_clutter(args.path)
    if args.oracle:
        _check_oracle(C, _records(C, args))
    u = is_unmixed(C, args.max_enum_vertices, args.threads)
    if args.json:
        return json.dumps({"schema": SCHEMA, "unmixed": u}) + "\n"
    return ("unmixed" if u else "not unmixed") + "\n"


def cmd_dimension(args) -> str:
    C = read_clutter(args.path)
    records = _records(C, args)
    if args.oracle:
        _check_oracle(C, records)
    d = max(r.codim_dim for r in records)
    if args.json:
        return json.dumps({"schema": SCHEMA, "dim": d}) + "\n"
    return f"{d}\n"


def cmd_cm(args) -> str:
    C = read_clutter(args.path)
    if args.oracle:
        _check_oracle(C, _records(C, args))
    v = cm_verdict(C, args.max_enum_vertices, args.threads)
    if args.json:
        return json.dumps({"schema": SCHEMA, **v.to_dict()}, indent=2) + "\n"
    depth = "unknown" if v.depth is None else v.depth
    lines = [f"{v.status.value} (unmixed: {'yes' if v.unmixed else 'no'}, dim {v.dim}, depth {depth})"]
    return "\n".join(lines + _certificate_lines(v.to_dict(), 1)) + "\n"


def cmd_cone(args) -> str:
    return dumps(cone(args.apex, read_clutter(args.path)))


def cmd_glue(args) -> str:
    return dumps(glue(read_clutter(args.path1), read_clutter(args.path2), args.at))


def cmd_random(args) -> str:
    return dumps(random_clutter(args.vertices, args.edges, args.max_arity, args.seed))


def cmd_export_generators(args) -> str:
    return "".join(line + "\n" for line in generator_lines(read_clutter(args.path)))


def _global_flags(p: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    p.add_argument("--threads", type=int, default=d(1), help="threads for subset enumeration")
    p.add_argument("--max-enum-vertices", type=int, default=d(MAX_ENUM_VERTICES),
                   help="vertex budget for exhaustive enumeration (default %(default)s)")
    p.add_argument("--oracle", action="store_true", default=d(False),
                   help="cross-check minimal primes against the brute-force oracle")
    p.add_argument("--seed", type=int, default=d(0), help="seed for the random command")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clutterbei", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        _global_flags(p, suppress=True)
        p.set_defaults(func=func)
        return p

    p = add("analyze", cmd_analyze, "full report for a clutter file")
    p.add_argument("path")
    p.add_argument("--max-display", type=int, default=50, help="cut sets listed in the report")
    add("minimal-primes", cmd_minimal_primes, "list the minimal primes").add_argument("path")
    add("unmixed", cmd_unmixed, "decide unmixedness").add_argument("path")
    add("dimension", cmd_dimension, "Krull dimension of S/J").add_argument("path")
    add("cm", cmd_cm, "Cohen-Macaulay verdict with certificate").add_argument("path")
    p = add("cone", cmd_cone, "cone over a clutter with a fresh apex")
    p.add_argument("path")
    p.add_argument("--apex", required=True)
    p = add("glue", cmd_glue, "glue two clutters at a shared free vertex")
    p.add_argument("path1")
    p.add_argument("path2")
    p.add_argument("--at", required=True)
    p = add("random", cmd_random, "seeded random clutter")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--max-arity", type=int, required=True)
    add("export-generators", cmd_export_generators, "binomial generators, one per line").add_argument("path")
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    if args.command == "random" and (args.vertices < 1 or args.max_arity < 2):
        print("error: need --vertices >= 1 and --max-arity >= 2", file=sys.stderr)
        return 2
    try:
        out = args.func(args)
    except ComplexityGuard as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (GlueVertexNotFree, UnknownVertex) as exc:
        if args.command == "glue":
            print(f"error: {exc}", file=sys.stderr)
            return 4
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LabelCollision as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5 if args.command == "cone" else 4
    except Unattainable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 6
    except OracleDisagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ClutterError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
