"""Command-line interface.

    ternarith [--format human|json|csv] [--augmented] COMMAND ...

Every command emits rows; ``json`` writes one compact object per line and
``csv`` a header plus rows, both with a fixed key order per command.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys

from . import kernels
from .core import Triple, product, product_inclusion, product_strip, product_symmetric
from .lattice import SvgStyle, discrete_volume, hexagon, render_svg
from .primality import (
    count_3factorizations,
    enumerate_3factorizations,
    factor2_full,
    lucky_numbers,
    rabinowitsch_discriminants,
)
from .sieves import ternary_sieve, three_primes_direct


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(2, f"{self.prog}: error: {message}\n")


def _natural(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def dumps(row: dict) -> str:
    return json.dumps(row, separators=(",", ":"), ensure_ascii=True)


class Emitter:
    """Writes rows in the selected format, streaming as they arrive."""

    def __init__(self, fmt: str, out):
        self.fmt = fmt
        self.out = out
        self._csv = None

    def row(self, row: dict, human: str | None = None) -> None:
        if self.fmt == "json":
            self.out.write(dumps(row) + "\n")
        elif self.fmt == "csv":
            if self._csv is None:
                self._csv = csv.writer(self.out, lineterminator="\n")
                self._csv.writerow(list(row))
            self._csv.writerow([
                " ".join(map(str, v)) if isinstance(v, (list, tuple)) else v
                for v in row.values()
            ])
        elif human is not None:
            self.out.write(human + "\n")

    def human(self, text: str) -> None:
        if self.fmt == "human":
            self.out.write(text + "\n")


def _fmt_factors(factors: dict[int, int]) -> str:
    return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in factors.items())


# ------------------------------------------------------------------ commands

def cmd_product(args, em: Emitter) -> None:
    t = Triple(args.x, args.y, args.z)
    vals = {
        "symmetric": product_symmetric(t),
        "strip": product_strip(t),
        "inclusion": product_inclusion(t),
    }
    p = product(t)
    if len(set(vals.values())) != 1 or p != vals["symmetric"]:
        raise CliError(f"formula mismatch for {t}: {vals}")
    row = {"x": args.x, "y": args.y, "z": args.z, "product": p, **vals}
    em.row(row, f"<{args.x},{args.y},{args.z}> = {p}  "
                f"(symmetric {vals['symmetric']}, strip {vals['strip']}, "
                f"inclusion {vals['inclusion']})")


def cmd_sieve3(args, em: Emitter) -> None:
    if args.limit < 2:
        raise CliError(f"limit must be >= 2, got {args.limit}")
    if args.method == "direct":
        values = iter(three_primes_direct(args.limit))
    else:
        values = ternary_sieve(args.limit).survivors()
    if args.augmented:
        values = _prepend(1, values)
    if em.fmt == "human":
        em.out.write(" ".join(str(v) for v in values) + "\n")
        return
    for v in values:
        em.row({"n": v})


def _prepend(first, it):
    yield first
    yield from it


def cmd_factor3(args, em: Emitter) -> None:
    fs = enumerate_3factorizations(args.n)
    triples = list(fs)
    for t in triples:
        em.row({"n": args.n, "x": t.x, "y": t.y, "z": t.z})
    em.human(" ".join(f"({t.x},{t.y},{t.z})" for t in triples))


def cmd_table(args, em: Emitter) -> None:
    if args.start > args.stop:
        raise CliError(f"empty range {args.start}..{args.stop}")
    ns = list(range(args.start, args.stop + 1))
    counts = [count_3factorizations(n) for n in ns]
    for n, c in zip(ns, counts):
        em.row({"n": n, "count": c})
    width = max(len(str(v)) for v in ns + counts)
    em.human("n      " + " ".join(str(n).rjust(width) for n in ns))
    em.human("count  " + " ".join(str(c).rjust(width) for c in counts))


def cmd_factor2(args, em: Emitter) -> None:
    if args.n < 2:
        raise CliError(f"n must be >= 2, got {args.n}")
    rep = factor2_full(args.n)
    prime = sum(rep.factors.values()) == 1
    row = {
        "n": args.n,
        "prime": prime,
        "repetition": list(rep.repetition) if rep.repetition else None,
        "gcd_lk": rep.gcd_lk,
        "gcd_lk1": rep.gcd_lk1,
        "divisor": rep.divisor,
        "factors": rep.flat_factors(),
    }
    if em.fmt != "human":
        em.row(row)
        return
    if prime:
        em.human(f"{args.n} is 2-prime")
        return
    if rep.repetition:
        k, l = rep.repetition
        em.human(f"repetition (k,l) = ({k},{l})")
        em.human(f"gcd(l-k, n) = {rep.gcd_lk}, gcd(l+k+1, n) = {rep.gcd_lk1}")
    em.human(f"divisor {rep.divisor}")
    em.human(f"factors {_fmt_factors(rep.factors)}")


def cmd_hexsvg(args, em: Emitter) -> None:
    h = hexagon(args.a, args.b, args.c)
    style = SvgStyle(scale=args.scale, point_radius=args.radius,
                     point_fill=args.point_fill, region_fill=args.region_fill)
    doc = render_svg(h, style)
    if args.path == "-":
        sys.stdout.write(doc.text)
        return
    doc.write(args.path)
    em.row({"a": args.a, "b": args.b, "c": args.c, "points": doc.point_count,
            "volume": discrete_volume(h), "path": args.path},
           f"wrote {args.path}: <{args.a},{args.b},{args.c}> with {doc.point_count} points")


def cmd_lucky(args, em: Emitter) -> None:
    vals = lucky_numbers(args.limit)
    for v in vals:
        em.row({"n": v})
    em.human(" ".join(map(str, vals)))


def cmd_rabinowitsch(args, em: Emitter) -> None:
    vals = rabinowitsch_discriminants(args.limit)
    for v in vals:
        em.row({"d": v})
    em.human(" ".join(map(str, vals)))


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="ternarith", description="Ternary multiplication toolkit.")
    ap.add_argument("--format", choices=("human", "json", "csv"), default="human")
    ap.add_argument("--augmented", action="store_true",
                    help="count 1 as a 3-prime")
    ap.add_argument("--backend", choices=("auto", "cython", "python"), default="auto")
    # the same flags are accepted after the subcommand
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("human", "json", "csv"),
                        default=argparse.SUPPRESS)
    common.add_argument("--augmented", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--backend", choices=("auto", "cython", "python"),
                        default=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("product", parents=[common],
                       help="ternary product <x,y,z> by all three formulas")
    for name in "xyz":
        p.add_argument(name, type=_natural)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("sieve3", parents=[common], help="3-primes up to LIMIT")
    p.add_argument("limit", type=_natural)
    p.add_argument("--method", choices=("sieve", "direct"), default="sieve")
    p.set_defaults(func=cmd_sieve3)

    p = sub.add_parser("factor3", parents=[common], help="all 3-factorizations of n")
    p.add_argument("n", type=_natural)
    p.set_defaults(func=cmd_factor3)

    p = sub.add_parser("table", parents=[common],
                       help="number of 3-factorizations for n in [start, stop]")
    p.add_argument("start", type=_natural)
    p.add_argument("stop", type=_natural)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("factor2", parents=[common],
                       help="factor n via the triangular-number trace")
    p.add_argument("n", type=_natural)
    p.set_defaults(func=cmd_factor2)

    p = sub.add_parser("hexsvg", parents=[common], help="draw the hexagon <a,b,c> as SVG")
    for name in "abc":
        p.add_argument(name, type=_natural)
    p.add_argument("path", help="output file, or - for stdout")
    p.add_argument("--scale", type=float, default=40.0)
    p.add_argument("--radius", type=float, default=5.0)
    p.add_argument("--point-fill", default="#d62728")
    p.add_argument("--region-fill", default="#d9f2d9")
    p.set_defaults(func=cmd_hexsvg)

    p = sub.add_parser("lucky", parents=[common], help="augmented Euler lucky numbers up to LIMIT")
    p.add_argument("limit", type=_natural)
    p.set_defaults(func=cmd_lucky)

    p = sub.add_parser("rabinowitsch", parents=[common],
                       help="discriminants d = 1 mod 4, |d| < LIMIT, passing the prime test")
    p.add_argument("limit", type=_natural)
    p.set_defaults(func=cmd_rabinowitsch)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.backend != "auto":
        chosen = kernels.python if args.backend == "python" else kernels.compiled
        if chosen is None:
            sys.stderr.write("ternarith: error: compiled backend is not available\n")
            return 2
        kernels.active = chosen
    em = Emitter(args.format, sys.stdout)
    try:
        args.func(args, em)
    except (CliError, ValueError, OverflowError, ArithmeticError, MemoryError, OSError) as exc:
        sys.stdout.flush()
        sys.stderr.write(f"ternarith: error: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
