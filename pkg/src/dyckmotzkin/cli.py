"""Command-line front end: ``dyckmotzkin <subcommand> ...``.

Exit status is 0 on success, 1 on domain errors (bad path, wrong family,
size over the cap) and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import sys

from .bijections import BIJECTIONS, BijectionError, InternalError, report
from .enumeration import (
    DEFAULT_CAP,
    SEQUENCES,
    KOutOfRange,
    SizeTooLarge,
    distribution_table,
    format_table,
    generate_paths,
)
from .paths import Family, PathError, ascii_art, compute_statistics, parse_path
from .verify import run_checks

FAMILIES = [f.value for f in Family]


class UsageError(Exception):
    pass


def _size_range(text: str) -> list[int]:
    """``"6"`` -> [6]; ``"1..6"`` -> [1, ..., 6]."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}")
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad size range {text!r}")
    return list(range(lo, hi + 1))


def _input_paths(args) -> list[str]:
    if args.path is not None:
        return [args.path]
    # every line is a path, so a blank line is the empty path
    return [line.strip() for line in sys.stdin.read().splitlines()]


def cmd_enumerate(args, out):
    for n in args.n:
        for p in generate_paths(args.family, n, cap=args.cap):
            out.write(p.text + "\n")
            if args.ascii:
                out.write(ascii_art(p) + "\n\n")


def cmd_stats(args, out):
    texts = _input_paths(args)
    for text in texts:
        p = parse_path(text, args.family)
        if len(texts) > 1:
            out.write(f"path\t{p.text}\n")
        for name, value in compute_statistics(p).items():
            out.write(f"{name}\t{value}\n")
        if args.ascii and p.text:
            out.write(ascii_art(p) + "\n")


def cmd_map(args, out):
    inverse = args.dir == "inverse"
    bij = BIJECTIONS[args.bij]
    family = bij.codomain if inverse else bij.domain
    for text in _input_paths(args):
        rep = report(args.bij, parse_path(text, family), inverse=inverse)
        out.write(rep.output.text + "\n")
        if args.report:
            for name, (a, b) in rep.transported_stats.items():
                out.write(f"  {name}\t{a}\t{b}\n")


def cmd_table(args, out):
    rows = []
    for n in args.n:
        if n < 1:
            raise UsageError("distribution tables need n >= 1")
        rows += distribution_table(args.stat, n, cap=args.cap)
    if args.format == "tsv":
        out.write(format_table(rows) + "\n")
        return
    out.write(f"{'n':>3} {'k':>3} {'brute':>10} {'formula':>10}  ok\n")
    for r in rows:
        out.write(f"{r.n:>3} {r.k:>3} {r.brute:>10} {r.formula:>10}  {'PASS' if r.ok else 'FAIL'}\n")
    if not all(r.ok for r in rows):
        return 1


def cmd_verify(args, out):
    results = run_checks(args.max_n, args.only or None)
    if args.only and len(results) != len(set(args.only)):
        raise UsageError("unknown check name in --only")
    for r in results:
        out.write(r.line() + "\n")
    return 0 if all(r.passed for r in results) else 1


def cmd_seq(args, out):
    f = SEQUENCES[args.name]
    out.write(",".join(str(f(n)) for n in range(args.start, args.start + args.count)) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyckmotzkin",
        description="Dyck and Motzkin path bijections, statistics and exhaustive checks.",
        epilog="Paths use U (up), D (down), F (black flat), G (green flat). "
               "Step positions in error messages are 1-based.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list every path of a family and size")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=_size_range, required=True, help="N or LO..HI")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--ascii", action="store_true", help="draw each path")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("stats", help="print path statistics")
    p.add_argument("--path", help="path string; read one per line from stdin if omitted")
    p.add_argument("--family", choices=FAMILIES, default="dyck")
    p.add_argument("--ascii", action="store_true")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("map", help="apply a bijection")
    p.add_argument("--bij", choices=sorted(BIJECTIONS), required=True)
    p.add_argument("--dir", choices=["forward", "inverse"], default="forward")
    p.add_argument("--path", help="path string; read one per line from stdin if omitted")
    p.add_argument("--report", action="store_true",
                   help="also print the statistics carried by the map")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("table", help="UDU/DDU distribution: brute force vs formula")
    p.add_argument("--stat", type=str.lower, choices=["udu", "ddu"], required=True)
    p.add_argument("--n", type=_size_range, required=True, help="N or LO..HI")
    p.add_argument("--format", choices=["tsv", "text"], default="tsv")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run the exhaustive invariant suite")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--only", action="append", metavar="NAME",
                   help="run only the named check (repeatable)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("seq", help="print a counting sequence")
    p.add_argument("--name", choices=sorted(SEQUENCES), required=True)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--start", type=int, default=0)
    p.set_defaults(func=cmd_seq)
    return parser


def _describe(exc: Exception) -> str:
    msg = str(exc)
    index = getattr(exc, "index", None)
    if index is not None:
        msg += f" (at step {index + 1}, counting from 1)"
    return msg


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status = args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"dyckmotzkin: error: {exc}", file=sys.stderr)
        return 2
    except (PathError, BijectionError, SizeTooLarge, KOutOfRange, InternalError) as exc:
        print(f"dyckmotzkin: {type(exc).__name__}: {_describe(exc)}", file=sys.stderr)
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
