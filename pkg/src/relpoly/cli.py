"""``relpoly`` command line.

Exit codes: 0 ok, 2 parse/input error, 3 classification error,
4 internal inconsistency, 5 property-suite failure.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import report, svg
from .arcs import Direction
from .bns import membership, sigma_arcs
from .checks import run_all
from .errors import RelpolyError
from .pipeline import Presentation, compute
from .splitting import hnn_splitting, splitting_complexity

EXIT_SUITE = 5


def _seed(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return v


def _count(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("count must be nonnegative")
    return v


def _gens(text: str) -> tuple[str, str]:
    if len(text) != 2:
        raise argparse.ArgumentTypeError("--gens takes two letters, e.g. 'ta'")
    return text[0], text[1]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="relpoly",
        description="Marked polytopes, Sigma invariants and splittings of <x,y | r>.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def relator_cmd(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("relator", help="word such as 'XYxy^2XYx^2YXyXyxY' (capitals are inverses)")
        sp.add_argument("--gens", type=_gens, default=("x", "y"), help="generator letters (default xy)")
        return sp

    sp = relator_cmd("polytope", "compute the marked polytope")
    sp.add_argument("--json", action="store_true", help="emit the JSON report")
    sp.add_argument("--svg", metavar="PATH", help="write an SVG picture to PATH")

    sp = relator_cmd("bns", "query the Sigma invariant")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--phi", help="character a,b (use --phi=-2,-1 for negative entries)")
    g.add_argument("--arcs", action="store_true", help="list all arcs of Sigma")

    sp = relator_cmd("split", "splitting complexity along a character")
    sp.add_argument("--phi", required=True, help="primitive character a,b")
    sp.add_argument("--witness", action="store_true", help="include an explicit HNN splitting")

    sp = sub.add_parser("check", help="run the seeded property suites")
    sp.add_argument("--count", type=_count, default=1000)
    sp.add_argument("--seed", type=_seed, default=0)
    sp.add_argument("--maxlen", type=int, default=40)
    sp.add_argument("--mutant", action="store_true", help="use a deliberately broken marking rule")
    return ap


def _presentation(args) -> Presentation:
    return Presentation.parse(args.relator, args.gens)


def cmd_polytope(args) -> int:
    res = compute(_presentation(args))
    if args.svg:
        svg.write(res, args.svg)
    if args.json:
        print(report.dumps(report.result_json(res, args.relator)))
    elif not args.svg:
        print(f"{res.presentation.format()}  [{res.info.classification.value}, b1={res.info.b1}]")
        print(f"M = {res.polytope}")
    return 0


def cmd_bns(args) -> int:
    p = _presentation(args)
    res = compute(p)
    out = report.result_json(res, args.relator)
    if args.arcs:
        out["sigma"] = report.sigma_json(sigma_arcs(p))
    else:
        out["query"] = report.membership_json(membership(p, Direction.parse(args.phi)))
    print(report.dumps(out))
    return 0


def cmd_split(args) -> int:
    p = _presentation(args)
    phi = Direction.parse(args.phi)
    rep = splitting_complexity(p, phi)
    data = hnn_splitting(p, phi) if args.witness else None
    out = report.result_json(compute(p), args.relator)
    out["splitting"] = report.splitting_json(rep, data)
    print(report.dumps(out))
    return 0


def cmd_check(args) -> int:
    t0 = time.perf_counter()
    results = run_all(args.count, args.seed, args.maxlen, mutant=args.mutant)
    for r in results:
        print(r.line())
    elapsed = time.perf_counter() - t0
    if all(r.passed for r in results):
        print(f"all suites passed ({elapsed:.1f}s)")
        return 0
    print(f"suite failure ({elapsed:.1f}s)", file=sys.stderr)
    return EXIT_SUITE


COMMANDS = {"polytope": cmd_polytope, "bns": cmd_bns, "split": cmd_split, "check": cmd_check}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except RelpolyError as exc:
        print(f"relpoly: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"relpoly: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
