"""Command-line front end.

Exit codes: 0 on success, 1 on input errors, 2 when ``verify`` finds a
failing invariant.
"""

import argparse
import sys

from .exceptions import HeartError
from .folding import folding_profile
from .heart import build_heart
from .io import (
    fraenkel_to_dict,
    load_body,
    special_points_to_list,
    write_json,
    write_sweep_csv,
)
from .points import maximize_gamma, minimize_mu_p, fraenkel_asymmetry, special_points
from .svg import render_svg
from .triangle import obtuse_sweep, parse_t_range
from .verify import run_checks

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _abs_tol(K, args):
    return args.tol * K.diameter


def _heart(args):
    K = load_body(args.input)
    h = build_heart(K, args.directions, _abs_tol(K, args), refine=args.refine)
    write_json(h.to_dict(), args.json)
    if args.svg:
        render_svg(K, h, [], args.svg)
    return EXIT_OK


def _profile(args):
    K = load_body(args.input)
    write_json(folding_profile(K, args.directions, _abs_tol(K, args)).to_dict(), args.json)
    return EXIT_OK


def _points(args):
    K = load_body(args.input)
    tol = _abs_tol(K, args)
    h = build_heart(K, args.directions, tol)
    pts = special_points(K, tol)
    for p in args.p or []:
        r = minimize_mu_p(K, p, tol)
        pts.append((f"mu_{p:g}", r.point, r.value))
    write_json(special_points_to_list(pts, h), args.json)
    if args.svg:
        render_svg(K, h, pts, args.svg)
    return EXIT_OK


def _sweep(args):
    rows = obtuse_sweep(args.b, args.h, parse_t_range(args.t))
    write_sweep_csv(rows, args.csv)
    return EXIT_OK


def _fraenkel(args):
    K = load_body(args.input)
    tol = _abs_tol(K, args)
    if args.r is None:
        out = fraenkel_to_dict(fraenkel_asymmetry(K, tol))
    else:
        center, gmax, flat = maximize_gamma(K, args.r, tol)
        out = {"r": args.r, "center": center.tolist(), "gamma_max": gmax, "flat_flag": flat}
    write_json(out, args.json)
    return EXIT_OK


def _verify(args):
    K = load_body(args.input)
    checks = run_checks(K, args.directions, _abs_tol(K, args), seed=args.seed)
    for c in checks:
        print(f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}")
    if args.json:
        write_json([{"name": c.name, "passed": bool(c.passed), "detail": c.detail} for c in checks], args.json)
    return EXIT_OK if all(c.passed for c in checks) else EXIT_VERIFY


def build_parser():
    parser = _Parser(prog="convexheart", description="Hearts of convex polygons.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def body(p, svg=False, directions=True):
        p.add_argument("--input", required=True, metavar="PATH", help="polygon JSON file")
        p.add_argument("--tol", type=float, default=1e-9, help="tolerance relative to the diameter")
        p.add_argument("--json", metavar="PATH", help="output file (default: stdout)")
        if directions:
            p.add_argument("--directions", type=int, default=720, metavar="N")
        if svg:
            p.add_argument("--svg", metavar="PATH")

    p = sub.add_parser("heart", help="outer approximation of the heart")
    body(p, svg=True)
    p.add_argument("--refine", action="store_true", help="extra directions near profile jumps")
    p.set_defaults(func=_heart)

    p = sub.add_parser("profile", help="maximal folding profile")
    body(p)
    p.set_defaults(func=_profile)

    p = sub.add_parser("points", help="distinguished points with heart membership")
    body(p, svg=True)
    p.add_argument("--p", type=float, action="append", metavar="X", help="extra power moment")
    p.set_defaults(func=_points)

    p = sub.add_parser("triangle-sweep", help="obtuse triangle area ratios as CSV")
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--h", type=float, default=1.0)
    p.add_argument("--t", default="2:16384:geometric", help="a:b:geometric[:n], a:b:linear:n or a list")
    p.add_argument("--csv", metavar="PATH", help="output file (default: stdout)")
    p.set_defaults(func=_sweep)

    p = sub.add_parser("fraenkel", help="Fraenkel asymmetry, or the gamma maximizer for --r")
    body(p, directions=False)
    p.add_argument("--r", type=float, metavar="X", help="disk radius (default: equal-area radius)")
    p.set_defaults(func=_fraenkel)

    p = sub.add_parser("verify", help="oracle cross-checks; exit 2 on failure")
    body(p)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (HeartError, ValueError, OSError) as exc:
        print(f"convexheart {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
