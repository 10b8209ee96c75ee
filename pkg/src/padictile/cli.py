"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 domain error (a denominator not invertible mod p), 4 resource cap hit.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from .caps import ResourceCapError
from .render import RenderSpec, render
from .streams import DigitStream, NotPAdicIntegerError, parse_rational, rational_to_stream, truncate
from .tiles import (
    InvalidTileError,
    TileFormatError,
    explicit_params,
    explicit_tile,
    format_tile,
    parse_tile_text,
    read_tile,
    solve_diophantine,
    tile_violation,
)
from .transducer import (
    Homeo,
    TauFormatError,
    apply,
    apply_stream,
    canonical_tau,
    factorize,
    parse_tau,
    required_input_precision,
    worked_example_homeo,
)
from .words import Word, is_composite


class UsageError(Exception):
    pass


def _base(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid base {text!r}") from None
    if value < 2:
        raise argparse.ArgumentTypeError(f"base must be >= 2, got {value}")
    return value


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=_positive, default=None, help="resource cap on generated words")

    homeo = argparse.ArgumentParser(add_help=False)
    homeo.add_argument("-p", type=_base, required=True, help="source base")
    homeo.add_argument("-q", type=_base, required=True, help="target base")
    homeo.add_argument("-m", type=_positive, default=1, help="index in the family of split counts")
    homeo.add_argument("--source-tile", metavar="FILE", help="tile file for the source side")
    homeo.add_argument("--target-tile", metavar="FILE", help="tile file for the target side")
    homeo.add_argument("--tau", default=None,
                       help="'paper' for the worked 3-to-5 example, or a tau file (default: order preserving)")

    parser = argparse.ArgumentParser(prog="padictile", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", parents=[common], help="split counts with equal leaf numbers")
    sp.add_argument("-p", type=_base, required=True)
    sp.add_argument("-q", type=_base, required=True)
    sp.add_argument("-m", type=_positive, default=1)

    sp = sub.add_parser("tile", parents=[common], help="write the explicit tile with s splits")
    sp.add_argument("-p", type=_base, required=True)
    sp.add_argument("-s", type=_positive, required=True)
    sp.add_argument("-o", "--output", metavar="FILE")
    sp.add_argument("--params", action="store_true", help="print the shape parameters instead")

    sp = sub.add_parser("map", parents=[common, homeo], help="apply the homeomorphism to digits")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--digits", help="little-endian digits, e.g. 2,1,0")
    src.add_argument("--rational", help="num/den with den prime to p")
    src.add_argument("--stream", help="eventually periodic input 'pre;per'")
    sp.add_argument("--precision", type=_natural, default=None, help="output digits to print")
    sp.add_argument("--trace", action="store_true", help="print the block factorization")

    sp = sub.add_parser("verify", parents=[common], help="check a tile file")
    sp.add_argument("tile_file")

    sp = sub.add_parser("render", parents=[common, homeo], help="draw the matched partitions")
    sp.add_argument("--depth", type=_natural, default=1)
    sp.add_argument("--format", choices=("ascii", "dot"), default="ascii")
    sp.add_argument("--coloring", choices=("none", "leaf-orbit"), default="leaf-orbit")
    return parser


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _warn_composite(err: TextIO, *bases: int) -> None:
    for b in sorted(set(bases)):
        if is_composite(b):
            print(f"warning: base {b} is not prime; the construction only uses the tree", file=err)


def _homeo(args) -> Homeo:
    sol = solve_diophantine(args.p, args.q, args.m)
    S = read_tile(_read(args.source_tile)) if args.source_tile else explicit_tile(args.p, sol.s)
    S_prime = read_tile(_read(args.target_tile)) if args.target_tile else explicit_tile(args.q, sol.s_prime)
    if S.base != args.p or S_prime.base != args.q:
        raise UsageError("tile file base does not match -p/-q")
    if len(S) != len(S_prime):
        raise UsageError(f"tiles have {len(S)} and {len(S_prime)} leaves; they must match")
    if args.tau == "paper":
        h = worked_example_homeo()
        if (S, S_prime) != (h.S, h.S_prime):
            raise UsageError("--tau paper only applies to p=3, q=5 with 2 and 1 splits")
        return h
    if args.tau:
        return Homeo(S, S_prime, parse_tau(_read(args.tau), S, S_prime))
    return Homeo(S, S_prime, canonical_tau(S, S_prime))


def _fmt(w: Word) -> str:
    return str(w) if len(w) else "ε"


def _cmd_solve(args, out: TextIO) -> int:
    sol = solve_diophantine(args.p, args.q, args.m)
    print(f"d={sol.d} s={sol.s} s'={sol.s_prime} leaves={sol.leaves}", file=out)
    return 0


def _cmd_tile(args, out: TextIO) -> int:
    if args.params:
        prm = explicit_params(args.p, args.s)
        print(f"L={prm.L} s_pen={prm.s_pen} n_short={prm.n_short} n_long={prm.n_long}", file=out)
        print("A=" + " ".join(f"({_fmt(w)})" for w in prm.A), file=out)
        print("B=" + " ".join(f"({_fmt(w)})" for w in prm.B), file=out)
        return 0
    text = format_tile(explicit_tile(args.p, args.s))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def _cmd_map(args, out: TextIO) -> int:
    h = _homeo(args)
    if args.digits is not None:
        w = Word.parse(args.digits, h.p)
        image, _ = apply(h, w)
        shown = image if args.precision is None else image.prefix(args.precision)
        print(str(shown), file=out)
    else:
        if args.rational is not None:
            num, den = parse_rational(args.rational)
            s = rational_to_stream(num, den, h.p)
        else:
            s = DigitStream.parse(args.stream, h.p)
        k = 20 if args.precision is None else args.precision
        image_stream = apply_stream(h, s)
        print(str(truncate(image_stream, k).digits), file=out)
        print(f"stream {image_stream}", file=out)
        w = truncate(s, required_input_precision(h, k)).digits
    if args.trace:
        blocks, rest = factorize(w, h.S)
        for b in blocks:
            print(f"{_fmt(b)} -> {_fmt(h.tau(b))}", file=out)
        print(f"pending {_fmt(rest)}", file=out)
    return 0


def _cmd_verify(args, out: TextIO) -> int:
    base, leaves = parse_tile_text(_read(args.tile_file))
    bad = tile_violation(base, leaves)
    if bad is not None:
        print(f"FAIL {bad.kind}: {bad.message}", file=out)
        if bad.witness is not None:
            print(f"witness {_fmt(bad.witness)}", file=out)
        return 1
    n = len(leaves)
    print(f"OK leaves={n} s={(n - 1) // (base - 1)}", file=out)
    return 0


def _cmd_render(args, out: TextIO) -> int:
    h = _homeo(args)
    out.write(render(h, RenderSpec(args.depth, args.format, args.coloring), cap=args.cap))
    return 0


def _join_values(argv: list[str]) -> list[str]:
    # "--rational -1/1" would otherwise be read as an unknown option
    out = []
    i = 0
    while i < len(argv):
        if argv[i] in ("--rational", "--stream", "--digits") and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


COMMANDS = {
    "solve": _cmd_solve,
    "tile": _cmd_tile,
    "map": _cmd_map,
    "verify": _cmd_verify,
    "render": _cmd_render,
}


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    argv = _join_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    bases = [getattr(args, k) for k in ("p", "q") if getattr(args, k, None)]
    _warn_composite(err, *bases)
    try:
        return COMMANDS[args.command](args, out)
    except NotPAdicIntegerError as exc:
        print(f"error: {exc}", file=err)
        return 3
    except ResourceCapError as exc:
        print(f"error: {exc}", file=err)
        return 4
    except (UsageError, TileFormatError, TauFormatError, InvalidTileError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        parser.print_usage(err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
