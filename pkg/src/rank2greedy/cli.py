"""Command-line interface.

Subcommands: compute, verify, probe-conjecture, render, expand-basis,
cluster-var.  Exit codes: 0 success, 1 usage/input error or failed
verification, 2 internal invariant violation (methods disagreeing).
All output is deterministic for a given invocation; parallel sweeps
merge their results in canonical order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import basisops, cluster, dyck, greedy
from .laurent import LaurentPoly, NotDivisibleError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INTERNAL = 2


def _jobs(args) -> int:
    env = os.environ.get("GREEDY_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise SystemExit("GREEDY_THREADS must be an integer")
        if n < 1:
            raise SystemExit("GREEDY_THREADS must be positive")
        return n
    return max(1, getattr(args, "jobs", 1) or 1)


def _render_poly(x: LaurentPoly, fmt: str) -> str:
    if fmt == "json":
        return x.to_json()
    if fmt == "latex":
        return x.to_latex()
    return str(x)


def _greedy_by_method(b, c, a1, a2, method):
    if method == "recurrence":
        return greedy.greedy_max_recurrence(b, c, a1, a2)
    if method == "linear":
        return greedy.greedy_linear_recurrence(b, c, a1, a2)
    if method == "dyck":
        return greedy.greedy_dyck(b, c, a1, a2)
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------

def cmd_compute(args) -> int:
    b, c = args.b, args.c
    a1, a2 = args.a
    methods = ["recurrence", "dyck"] if args.method == "all" else [args.method]
    if args.method == "all" and a1 > 0 and a2 > 0:
        methods.append("linear")
    if args.method == "linear" and (a1 <= 0 or a2 <= 0):
        print("method=linear requires a1, a2 > 0", file=sys.stderr)
        return EXIT_USAGE
    results = [_greedy_by_method(b, c, a1, a2, m) for m in methods]
    first = results[0]
    for m, r in zip(methods[1:], results[1:]):
        if r.grid != first.grid:
            print(f"internal disagreement: {methods[0]} vs {m}", file=sys.stderr)
            return EXIT_INTERNAL
    print(_render_poly(first.to_laurent(), args.format))
    return EXIT_OK


def cmd_cluster_var(args) -> int:
    x = cluster.cluster_variable(args.b, args.c, args.m)
    print(_render_poly(x, args.format))
    return EXIT_OK


def cmd_expand_basis(args) -> int:
    b, c = args.b, args.c
    if args.json:
        x = LaurentPoly.from_json(args.json)
    elif args.a is not None:
        a1, a2 = args.a
        x = greedy.greedy_max_recurrence(b, c, a1, a2).to_laurent()
    else:
        print("expand-basis needs -a or --json", file=sys.stderr)
        return EXIT_USAGE
    try:
        exp = basisops.expand_pointed_basis(x, b, c, args.kind, cap=args.cap)
    except (RuntimeError, ValueError) as err:
        print(str(err), file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        obj = {
            "kind": exp.kind,
            "coeffs": [
                {"d": [b1, b2], "u": str(u)}
                for (b1, b2), u in sorted(exp.coeffs.items())
            ],
        }
        print(json.dumps(obj, separators=(",", ":")))
    else:
        for (b1, b2), u in sorted(exp.coeffs.items()):
            print(f"({b1},{b2}) {u}")
    return EXIT_OK


def cmd_probe_conjecture(args) -> int:
    b, c = args.b, args.c
    lo, hi = args.window
    combo = (greedy.greedy_max_recurrence(b, c, 4, 7).to_laurent()
             + greedy.greedy_max_recurrence(b, c, 7, 4).to_laurent()
             - greedy.greedy_max_recurrence(b, c, 1, 1).to_laurent())
    print(f"probing x[4,7] + x[7,4] - x[1,1] at (b,c)=({b},{c}), "
          f"clusters m in [{lo},{hi}] (evidence only)")
    try:
        minima = cluster.probe_minima(combo, b, c, range(lo, hi + 1))
    except NotDivisibleError as err:
        print(str(err), file=sys.stderr)
        return EXIT_USAGE
    ok = True
    for m in sorted(minima):
        print(f"m={m}: min coefficient {minima[m]}")
        if minima[m] < 0:
            ok = False
    print("all coefficients nonnegative on the window"
          if ok else "negative coefficient found")
    return EXIT_OK if ok else EXIT_USAGE


def cmd_render(args) -> int:
    from . import render as rendermod

    if args.what == "dyck":
        svg = rendermod.render_dyck(args.a[0], args.a[1])
    elif args.what == "shadows":
        s2 = _parse_int_list(args.s2)
        svg = rendermod.render_shadows(args.a[0], args.a[1], args.b, s2)
    elif args.what == "support":
        region = greedy.support_region(args.b, args.c, args.a[0], args.a[1])
        svg = rendermod.render_support(region)
    else:  # pragma: no cover - argparse restricts choices
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def _parse_int_list(s: str):
    if not s:
        return []
    try:
        return [int(tok) for tok in s.split(",")]
    except ValueError:
        raise SystemExit("expected a comma-separated list of integers")


# ---------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------

def _equivalence_cell(task):
    """One sweep cell: do the construction methods agree at (a1,a2)?"""
    b, c, a1, a2 = task
    rec = greedy.greedy_max_recurrence(b, c, a1, a2)
    dy = greedy.greedy_dyck(b, c, a1, a2)
    ok = rec.grid == dy.grid
    if ok and a1 > 0 and a2 > 0:
        lin = greedy.greedy_linear_recurrence(b, c, a1, a2)
        ok = lin.grid == rec.grid
    return (a1, a2, ok)


def _suite_equivalence(b, c, mx, jobs):
    tasks = [(b, c, a1, a2)
             for a1 in range(-3, mx + 1) for a2 in range(-3, mx + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_equivalence_cell, tasks, chunksize=8))
    else:
        results = [_equivalence_cell(t) for t in tasks]
    lines = []
    ok = True
    for a1, a2, good in sorted(results):
        if not good:
            ok = False
            lines.append(f"FAIL equivalence ({a1},{a2})")
    lines.append(f"{'PASS' if ok else 'FAIL'} equivalence box [-3,{mx}]^2")
    return ok, lines


def _suite_symmetry(b, c, mx, jobs):
    from .arith import plus_part

    ok = True
    lines = []
    for a1 in range(-3, mx + 1):
        for a2 in range(-3, mx + 1):
            x = greedy.greedy_max_recurrence(b, c, a1, a2).to_laurent()
            s1 = cluster.sigma(1, x, b, c)
            e1 = greedy.greedy_max_recurrence(
                b, c, a1, c * plus_part(a1) - a2).to_laurent()
            s2 = cluster.sigma(2, x, b, c)
            e2 = greedy.greedy_max_recurrence(
                b, c, b * plus_part(a2) - a1, a2).to_laurent()
            inv = (cluster.sigma(1, s1, b, c) == x
                   and cluster.sigma(2, s2, b, c) == x)
            if s1 != e1 or s2 != e2 or not inv:
                ok = False
                lines.append(f"FAIL symmetry ({a1},{a2})")
    lines.append(f"{'PASS' if ok else 'FAIL'} symmetry box [-3,{mx}]^2")
    return ok, lines


def _suite_supports(b, c, mx, jobs):
    ok = True
    lines = []
    for a1 in range(-3, mx + 1):
        for a2 in range(-3, mx + 1):
            e = greedy.greedy_max_recurrence(b, c, a1, a2)
            region = greedy.support_region(b, c, a1, a2)
            if not all(region.contains(p, q) for p, q in e.grid):
                ok = False
                lines.append(f"FAIL supports ({a1},{a2})")
                continue
            if max(a1, a2) > 0:
                support = {
                    (-a1 + b * p, -a2 + c * q) for p, q in e.grid
                }
                if all(d1 >= 0 and d2 >= 0 for d1, d2 in support):
                    ok = False
                    lines.append(f"FAIL supports ({a1},{a2}) in Z>=0^2")
    lines.append(f"{'PASS' if ok else 'FAIL'} supports box [-3,{mx}]^2")
    return ok, lines


def _suite_basis(b, c, mx, jobs):
    ok = True
    lines = []
    for a1 in range(1, mx + 1):
        for a2 in range(1, mx + 1):
            x = greedy.greedy_max_recurrence(b, c, a1, a2).to_laurent()
            exp = basisops.expand_pointed_basis(x, b, c, "standard")
            if not basisops.verify_triangular(exp, a1, a2):
                ok = False
                lines.append(f"FAIL basis ({a1},{a2})")
            if basisops.reconstruct(exp, b, c) != x:
                ok = False
                lines.append(f"FAIL basis round-trip ({a1},{a2})")
    lines.append(f"{'PASS' if ok else 'FAIL'} basis box [1,{mx}]^2")
    return ok, lines


def _suite_positivity(b, c, mx, jobs):
    ok = True
    lines = []
    window = range(-5, 7)
    for k in range(1, mx + 1):
        x = greedy.greedy_max_recurrence(b, c, k, k).to_laurent()
        if not cluster.is_positive_at(x, b, c, window):
            ok = False
            lines.append(f"FAIL positivity x[{k},{k}]")
    lines.append(f"{'PASS' if ok else 'FAIL'} positivity diag [1,{mx}], "
                 "window [-5,6] (evidence only)")
    return ok, lines


_SUITES = {
    "equivalence": _suite_equivalence,
    "symmetry": _suite_symmetry,
    "supports": _suite_supports,
    "basis": _suite_basis,
    "positivity": _suite_positivity,
}


def cmd_verify(args) -> int:
    suite = _SUITES[args.suite]
    ok, lines = suite(args.b, args.c, args.max, _jobs(args))
    for line in lines:
        print(line)
    return EXIT_OK if ok else EXIT_USAGE


# ---------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rank2greedy",
        description="Exact computations with greedy elements of rank-2 "
                    "cluster algebras A(b,c).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_bc(p):
        p.add_argument("-b", type=int, required=True, help="first exchange exponent")
        p.add_argument("-c", type=int, required=True, help="second exchange exponent")

    p = sub.add_parser("compute", help="compute a greedy element x[a1,a2]")
    add_bc(p)
    p.add_argument("-a", type=int, nargs=2, required=True, metavar=("A1", "A2"))
    p.add_argument("--method", choices=["recurrence", "linear", "dyck", "all"],
                   default="recurrence")
    p.add_argument("--format", choices=["text", "json", "latex"], default="text")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("cluster-var", help="expand a cluster variable x_m")
    add_bc(p)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--format", choices=["text", "json", "latex"], default="text")
    p.set_defaults(func=cmd_cluster_var)

    p = sub.add_parser("expand-basis",
                       help="expand an element over the standard or greedy basis")
    add_bc(p)
    p.add_argument("-a", type=int, nargs=2, metavar=("A1", "A2"),
                   help="expand the greedy element x[a1,a2]")
    p.add_argument("--json", help="expand this serialized Laurent polynomial")
    p.add_argument("--kind", choices=["standard", "greedy"], default="standard")
    p.add_argument("--cap", type=int, default=10**6)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_expand_basis)

    p = sub.add_parser("probe-conjecture",
                       help="probe positivity of x[4,7]+x[7,4]-x[1,1] "
                            "over a cluster window (evidence only)")
    add_bc(p)
    p.add_argument("--window", type=int, nargs=2, default=[-8, 11],
                   metavar=("LO", "HI"))
    p.set_defaults(func=cmd_probe_conjecture)

    p = sub.add_parser("render", help="render an SVG figure")
    p.add_argument("what", choices=["dyck", "shadows", "support"])
    p.add_argument("-a", type=int, nargs=2, required=True, metavar=("A1", "A2"))
    p.add_argument("-b", type=int, default=1)
    p.add_argument("-c", type=int, default=1)
    p.add_argument("--s2", default="", help="comma-separated vertical edge indices")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("suite", choices=sorted(_SUITES))
    add_bc(p)
    p.add_argument("--max", type=int, default=5, help="box bound")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes for sweeps (GREEDY_THREADS overrides)")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "b", 1) < 1 or getattr(args, "c", 1) < 1:
        print("exchange exponents must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except SystemExit:
        raise
    except (ValueError, NotDivisibleError) as err:
        print(str(err), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
