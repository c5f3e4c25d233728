"""Command line interface.

Exit codes: 0 on success, 1 when verification fails, 2 on usage errors
including malformed paths, trees and form names.  All output is
deterministic byte for byte given identical flags; JSON output is line
oriented where a command prints several records.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import numbers, paths, series, trees, verify

__all__ = ["main"]


def _print_count(value: int) -> int:
    print(value)
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    n = args.length
    if args.method == "closed":
        return _print_count(numbers.count_nondecreasing_closed(n))
    if args.method == "series":
        coeff = series.gf_coefficients("with-empty", n)[n]
        return _print_count(coeff.numerator)
    if args.method == "brute":
        return _print_count(sum(1 for _ in paths.enumerate_nondecreasing_filter(n)))
    return _print_count(sum(1 for _ in paths.enumerate_nondecreasing_direct(n)))


def _cmd_table(args: argparse.Namespace) -> int:
    top = args.max
    if top < 0:
        raise ValueError("--max must be >= 0")
    closed = [numbers.count_nondecreasing_closed(n) for n in range(top + 1)]
    by_series = [c.numerator for c in series.gf_coefficients("with-empty", top)]
    rows = []
    for n in range(top + 1):
        brute = (
            sum(1 for _ in paths.enumerate_nondecreasing_filter(n))
            if n <= args.brute_cap
            else None
        )
        agree = closed[n] == by_series[n] and brute in (None, closed[n])
        rows.append((n, closed[n], by_series[n], brute, agree))
    if args.json:
        for n, c, s, b, agree in rows:
            record = {"n": n, "closed": c, "series": s, "brute": b, "agree": agree}
            print(json.dumps(record, separators=(",", ":")))
    else:
        print("n\tclosed\tseries\tbrute\tagree")
        for n, c, s, b, agree in rows:
            brute_cell = "-" if b is None else str(b)
            print(f"{n}\t{c}\t{s}\t{brute_cell}\t{'yes' if agree else 'NO'}")
    return 0


def _cmd_list(args: argparse.Namespace) -> int:
    for p in paths.enumerate_nondecreasing_filter(args.length):
        print(paths.path_to_json(p) if args.json else paths.render_path(p))
    return 0


def _cmd_tree(args: argparse.Namespace) -> int:
    path = paths.validate(paths.parse_path(args.path))
    tree = trees.path_to_tree(path)
    print(trees.tree_to_json(tree) if args.json else trees.render_outline(tree))
    return 0


def _cmd_path(args: argparse.Namespace) -> int:
    tree = trees.tree_from_json(args.tree)
    print(paths.render_path(trees.tree_to_path(tree)))
    return 0


def _cmd_gf(args: argparse.Namespace) -> int:
    coeffs = series.gf_coefficients(args.form, args.terms)
    if args.json:
        print(series.coefficients_to_json(args.form, coeffs))
    else:
        print(series.format_coefficients(coeffs))
    return 0


def _cmd_mountains(args: argparse.Namespace) -> int:
    if args.steps < 0:
        raise ValueError("--steps must be >= 0")
    return _print_count(numbers.count_mountains(args.steps))


def _cmd_tilings(args: argparse.Namespace) -> int:
    n = args.length
    if args.list:
        for tiling in numbers.enumerate_tilings(n):
            if args.first_square and (not tiling or tiling[0] is not numbers.Piece.SQUARE):
                continue
            print(numbers.render_tiling(tiling))
        return 0
    if args.first_square:
        return _print_count(numbers.count_square_first_tilings(n))
    return _print_count(numbers.count_tilings(n))


def _cmd_verify(args: argparse.Namespace) -> int:
    results = verify.run_checks(args.max)
    failures = 0
    for result in results:
        if result.passed:
            print(f"PASS {result.name}")
        else:
            failures += 1
            detail = f" ({result.detail})" if result.detail else ""
            print(f"FAIL {result.name}{detail}")
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return 1 if failures else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deutschpaths",
        description=(
            "Exact counting, listing and conversion tools for Deutsch paths "
            "whose valley levels never decrease."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count the paths of one length")
    p.add_argument("--length", type=int, required=True, metavar="N")
    p.add_argument(
        "--method",
        choices=("closed", "series", "brute", "direct"),
        default="closed",
        help="counting route (default: closed)",
    )
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("table", help="counts for all lengths up to a bound")
    p.add_argument("--max", type=int, required=True, metavar="N")
    p.add_argument("--json", action="store_true", help="one JSON record per row")
    p.add_argument(
        "--brute-cap",
        type=int,
        default=14,
        metavar="K",
        help="largest length counted by enumeration (default: 14)",
    )
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("list", help="print every path of one length")
    p.add_argument("--length", type=int, required=True, metavar="N")
    p.add_argument("--json", action="store_true", help="one JSON record per path")
    p.set_defaults(handler=_cmd_list)

    p = sub.add_parser("tree", help="encode a path as a marked tree")
    p.add_argument("--path", required=True, metavar="TOKENS", help='e.g. "U U D2 U D1"')
    p.add_argument("--json", action="store_true", help="print the JSON record")
    p.set_defaults(handler=_cmd_tree)

    p = sub.add_parser("path", help="decode a marked tree back to its path")
    p.add_argument("--tree", required=True, metavar="JSON", help="tree record")
    p.set_defaults(handler=_cmd_path)

    p = sub.add_parser("gf", help="expand a named generating function")
    p.add_argument("--form", required=True, metavar="NAME")
    p.add_argument("--terms", type=int, required=True, metavar="N", help="highest order")
    p.add_argument("--json", action="store_true", help="print the JSON record")
    p.set_defaults(handler=_cmd_gf)

    p = sub.add_parser("mountains", help="count mountains of one length")
    p.add_argument("--steps", type=int, required=True, metavar="K")
    p.set_defaults(handler=_cmd_mountains)

    p = sub.add_parser("tilings", help="count or list square and domino tilings")
    p.add_argument("--length", type=int, required=True, metavar="N")
    p.add_argument(
        "--first-square", action="store_true", help="restrict to tilings opening with a square"
    )
    p.add_argument("--list", action="store_true", help="print the tilings instead of counting")
    p.set_defaults(handler=_cmd_tilings)

    p = sub.add_parser("verify", help="run the full cross-check suite")
    p.add_argument(
        "--max",
        type=int,
        default=12,
        metavar="N",
        help="largest length brute-force enumerations cover (default: 12)",
    )
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
