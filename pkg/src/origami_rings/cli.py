"""Command-line front end.

Exit codes: 0 success, 1 domain failure (verification, membership, budget),
2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from sympy import isprime

from . import closure
from .cyclotomic import CycNum, integrality_profile, subfield_coords, to_complex
from .geometry import Angle, ParallelLinesError, intersect
from .literal import LiteralSyntaxError, format_literal, parse_literal
from .numtheory import Verdict, decompose, in_origami_ring, ring_membership
from .svg import render_svg
from .synth import FoldProgram, MalformedProgramError, synth_element, synth_neg_one, synth_two, verify

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def parse_exact_literal(text: str, n: int) -> CycNum:
    """Parse a literal over z = zeta_2n (the ambient field of U_n)."""
    return parse_literal(text, 2 * n)


def _fmt_complex(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}i"


def _order(n: int) -> int:
    if n < 3:
        raise InputError(f"--n must be at least 3 (got {n})")
    return n


def cmd_closure(args) -> int:
    n = _order(args.n)
    if args.depth < 0 or args.budget < 2:
        raise InputError("--depth must be >= 0 and --budget >= 2")
    cs = closure.generate(n, args.depth, budget=args.budget)
    Path(args.out).write_text(closure.export_points(cs))
    if args.svg:
        Path(args.svg).write_text(render_svg(cs.sorted_points(), title=f"R(U_{n}), depth {cs.depth}"))
    print(f"n={n} depth={cs.depth} points={len(cs)} per-depth={list(cs.counts)}")
    if not cs.complete:
        print(f"budget {args.budget} exhausted; output is partial (complete=false)", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_synth(args) -> int:
    n = _order(args.n)
    N = 2 * n
    if args.builtin == "two":
        prog, target = synth_two(n), CycNum.rational(N, 2)
    elif args.builtin == "neg-one":
        prog, target = synth_neg_one(n), CycNum.rational(N, -1)
    else:
        if args.builtin == "inv-n":
            if isprime(n):
                print(f"1/{n} is {Verdict.LOCALIZED.describe(n)}; not constructible for prime n")
                return EXIT_FAIL
            target = CycNum.rational(N, 1) / n
        else:
            target = parse_exact_literal(args.target, n)
        if not in_origami_ring(target, n):
            print(f"{format_literal(target)}: {ring_membership(target, n).describe(n)} - not constructible")
            return EXIT_FAIL
        prog = synth_element(decompose(target, n))
    result = verify(prog, target)
    if not result:
        print(result.diagnostic, file=sys.stderr)
        return EXIT_FAIL
    Path(args.out).write_text(prog.to_json() + "\n")
    print(f"instructions={len(prog)}")
    print(f"value={format_literal(target)}")
    print(f"float={_fmt_complex(to_complex(target))}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        prog = FoldProgram.from_json(Path(args.prog).read_text())
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise InputError(f"cannot read program {args.prog}: {exc}") from exc
    expected = parse_exact_literal(args.expect, prog.n)
    result = verify(prog, expected)
    print(result.diagnostic)
    return EXIT_OK if result else EXIT_FAIL


def cmd_membership(args) -> int:
    n = _order(args.n)
    x = parse_exact_literal(args.value, n)
    verdict = ring_membership(x, n)
    print(verdict.describe(n))
    coords = subfield_coords(x, n)
    if coords is not None:
        print("coords: [" + ", ".join(str(c) for c in coords) + "]")
        print("denominator primes: {" + ", ".join(str(p) for p in sorted(integrality_profile(coords))) + "}")
    return EXIT_OK if in_origami_ring(x, n) else EXIT_FAIL


def cmd_intersect(args) -> int:
    n = _order(args.n)
    p = parse_exact_literal(args.p, n)
    q = parse_exact_literal(args.q, n)
    try:
        z = intersect(Angle(n, args.u), Angle(n, args.v), p, q)
    except ParallelLinesError as exc:
        raise InputError(str(exc)) from exc
    print(format_literal(z))
    print(_fmt_complex(to_complex(z)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="origami-rings", description="Exact origami ring toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("closure", help="generate points of R(U_n) breadth-first")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--budget", type=int, default=closure.DEFAULT_BUDGET)
    p.add_argument("--out", required=True)
    p.add_argument("--svg")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("synth", help="write a fold program for a target point")
    p.add_argument("--n", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--target")
    g.add_argument("--builtin", choices=["two", "neg-one", "inv-n"])
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("verify", help="run a fold program and compare with a value")
    p.add_argument("--prog", required=True)
    p.add_argument("--expect", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("membership", help="classify a value against Z[zeta_n] and Z[1/n, zeta_n]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--value", required=True)
    p.set_defaults(func=cmd_membership)

    p = sub.add_parser("intersect", help="exact intersection of L_u(p) and L_v(q)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.set_defaults(func=cmd_intersect)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, LiteralSyntaxError, MalformedProgramError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
