"""Command line front end: term lookup, triple generation, quadratic
analysis, family tables, verification sweeps, and SVG figures.

Exit codes: 0 success (all claims pass), 1 verification counterexample,
2 usage or input error. Every subcommand takes --format json|csv|table;
JSON and CSV render numbers as decimal strings.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import replace
from typing import List, Optional

from . import families, oracle
from .fibonacci import fib, fib_mod, fib_window
from .numeric import number_str
from .quadratic import NEGATIVE, POSITIVE, QuadPoly, analyze, build_quadratic
from .svgplot import SAMPLES, write_quadratic_svg
from .triples import primitivity, scale, triple_from_window

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2

FORMATS = ("table", "json", "csv")


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def _print_csv(header: List[str], rows: List[List[object]]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _print_table(header: List[str], rows: List[List[object]]) -> None:
    cells = [[str(v) for v in row] for row in rows]
    widths = [max(len(h), *(len(r[k]) for r in cells)) if cells else len(h)
              for k, h in enumerate(header)]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    for row in cells:
        print("  ".join(v.ljust(w) for v, w in zip(row, widths)))


def cmd_fib(args) -> int:
    if args.mod is not None:
        value = fib_mod(args.n, args.mod)
    else:
        value = fib(args.n)
    if args.format == "json":
        _print_json({"n": str(args.n), "mod": None if args.mod is None else str(args.mod),
                     "value": number_str(value)})
    elif args.format == "csv":
        _print_csv(["n", "mod", "value"],
                   [[args.n, "" if args.mod is None else args.mod, number_str(value)]])
    else:
        print(number_str(value))
    return EXIT_OK


def cmd_triples(args) -> int:
    if args.i_from > args.i_to:
        raise ValueError(f"--from {args.i_from} exceeds --to {args.i_to}")
    rows = []
    for i in range(args.i_from, args.i_to + 1):
        t = triple_from_window(fib_window(i))
        if args.scale > 1:
            t = scale(t, args.scale)
        _, g = primitivity(t)
        rows.append((i, t, g))
    if args.format == "json":
        _print_json([dict(i=str(i), **t.to_dict()) for i, t, _ in rows])
    elif args.format == "csv":
        _print_csv(["i", "leg_a", "leg_b", "hyp", "gcd", "primitive"],
                   [[i, t.leg_a, t.leg_b, t.hyp, g, g == 1] for i, t, g in rows])
    else:
        _print_table(["i", "leg_a", "leg_b", "hyp", "gcd", "primitive"],
                     [[i, t.leg_a, t.leg_b, t.hyp, g, g == 1] for i, t, g in rows])
    return EXIT_OK


def _emit_analysis(report, fmt: str) -> None:
    d = report.to_dict()
    if fmt == "json":
        _print_json(d)
        return
    flat = {
        "a": d["poly"]["a"], "b": d["poly"]["b"], "c": d["poly"]["c"],
        "kind": d["roots"]["kind"], "x1": d["roots"]["x1"], "x2": d["roots"]["x2"],
        "vertex_x": d["vertex_x"], "vertex_y": d["vertex_y"],
        "discriminant": d["discriminant"],
        "integral_signed": d["integral_signed"], "integral_abs": d["integral_abs"],
        "p1": None if d["breakdown"] is None else d["breakdown"]["p1"],
        "p2": None if d["breakdown"] is None else d["breakdown"]["p2"],
        "p3": None if d["breakdown"] is None else d["breakdown"]["p3"],
    }
    if fmt == "csv":
        _print_csv(list(flat), [["" if v is None else v for v in flat.values()]])
    else:
        for key, value in flat.items():
            print(f"{key:>16}: {'-' if value is None else value}")


def cmd_quad(args) -> int:
    if args.quad_cmd == "build":
        orientation = NEGATIVE if args.neg else POSITIVE
        q = build_quadratic(args.leg, args.hyp, orientation)
    else:
        q = QuadPoly(args.a, args.b, args.c)
    _emit_analysis(analyze(q), args.format)
    return EXIT_OK


def cmd_family(args) -> int:
    flavors = [families.FLAVOR_F, families.FLAVOR_G] if args.flavor == "both" else [args.flavor]
    rows = []
    for n in range(0, args.n_max + 1):
        for flavor in flavors:
            t, q = families.family_345(n, flavor)
            report = analyze(q)
            closed = families.family_345_integral_abs(n, flavor)
            rows.append((n, flavor, t, report, closed, report.integral_abs == closed))
    if args.format == "json":
        _print_json([
            {"n": str(n), "flavor": flavor, "triple": t.to_dict(),
             "analysis": report.to_dict(), "closed_form": str(closed), "match": match}
            for n, flavor, t, report, closed, match in rows
        ])
        return EXIT_OK
    header = ["n", "a", "b", "c", "x1", "x2", "vx", "vy", "integral_abs",
              "flavor", "closed_form", "match"]
    table = [[n, q.a, q.b, q.c,
              number_str(report.roots.x1), number_str(report.roots.x2),
              number_str(report.vertex_x), number_str(report.vertex_y),
              number_str(report.integral_abs), flavor, closed, match]
             for n, flavor, t, report, closed, match in rows
             for q in (report.poly,)]
    if args.format == "csv":
        _print_csv(header, table)
    else:
        _print_table(header, table)
    return EXIT_OK


def cmd_verify(args) -> int:
    config = oracle.SweepConfig()
    if args.max is not None:
        config = replace(
            config,
            triples_max=args.max,
            scale_max=args.max,
            roots_max=args.max,
            family_max=args.max,
            mod3_max=args.max,
            witness_max=min(args.max, config.witness_max),
            theorem3_max=args.max,
        )
    names = None if args.claim == "all" else [args.claim]
    reports = oracle.run_all_claims(config, names)
    failed = [r for r in reports if not r.passed]
    if args.format == "json":
        _print_json([r.to_dict() for r in reports])
    elif args.format == "csv":
        _print_csv(["claim", "range", "status", "counterexamples", "elapsed"],
                   [[r.claim_id, r.range, r.status, len(r.counterexamples), f"{r.elapsed:.3f}"]
                    for r in reports])
    else:
        for r in reports:
            print(f"{r.status.upper():4}  {r.claim_id:10} ({r.range})  [{r.elapsed:.3f}s]")
        if failed:
            print(json.dumps([r.to_dict() for r in failed], indent=2))
    return EXIT_COUNTEREXAMPLE if failed else EXIT_OK


def cmd_plot(args) -> int:
    orientation = NEGATIVE if args.neg else POSITIVE
    q = build_quadratic(args.leg, args.hyp, orientation)
    write_quadratic_svg(args.out, q)
    if args.format == "json":
        _print_json({"out": args.out, "samples": str(SAMPLES),
                     "poly": q.to_dict()})
    elif args.format == "csv":
        _print_csv(["out", "samples", "a", "b", "c"],
                   [[args.out, SAMPLES, q.a, q.b, q.c]])
    else:
        print(f"wrote {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibquad",
        description="Integer-root quadratics from Pythagorean triples and "
                    "Fibonacci windows, with exact arithmetic throughout.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default="table",
                       help="output format (default: table)")

    p = sub.add_parser("fib", help="Fibonacci term, optionally reduced modulo m")
    p.add_argument("--n", type=_nonneg, required=True, help="term index (>= 0)")
    p.add_argument("--mod", type=int, default=None, help="modulus (>= 2)")
    add_format(p)
    p.set_defaults(func=cmd_fib)

    p = sub.add_parser("triples", help="triples generated from Fibonacci windows")
    p.add_argument("--from", dest="i_from", type=_positive, required=True,
                   help="first window index (>= 1)")
    p.add_argument("--to", dest="i_to", type=_positive, required=True,
                   help="last window index")
    p.add_argument("--scale", type=_positive, default=1, help="scale factor (>= 1)")
    add_format(p)
    p.set_defaults(func=cmd_triples)

    p = sub.add_parser("quad", help="build or analyze a quadratic")
    quad_sub = p.add_subparsers(dest="quad_cmd", required=True)
    pb = quad_sub.add_parser("build", help="build from a triple leg and hypotenuse")
    pb.add_argument("--leg", type=_positive, required=True)
    pb.add_argument("--hyp", type=_positive, required=True)
    pb.add_argument("--neg", action="store_true", help="mirror orientation -q(-x)")
    add_format(pb)
    pb.set_defaults(func=cmd_quad)
    pa = quad_sub.add_parser("analyze", help="analyze raw coefficients")
    pa.add_argument("--a", type=int, required=True)
    pa.add_argument("--b", type=int, required=True)
    pa.add_argument("--c", type=int, required=True)
    add_format(pa)
    pa.set_defaults(func=cmd_quad)

    p = sub.add_parser("family", help="scaled (3,4,5) family table")
    p.add_argument("--n-max", dest="n_max", type=_nonneg, required=True)
    p.add_argument("--flavor", choices=(families.FLAVOR_F, families.FLAVOR_G, "both"),
                   default="both")
    add_format(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="run verification sweeps")
    p.add_argument("claim", choices=("all",) + oracle.CLAIM_ORDER)
    p.add_argument("--max", type=_positive, default=None,
                   help="override the selected claims' primary sweep bound")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plot", help="write an SVG figure of a built quadratic")
    p.add_argument("--leg", type=_positive, required=True)
    p.add_argument("--hyp", type=_positive, required=True)
    p.add_argument("--neg", action="store_true", help="mirror orientation -q(-x)")
    p.add_argument("--out", required=True, help="output SVG path")
    add_format(p)
    p.set_defaults(func=cmd_plot)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
