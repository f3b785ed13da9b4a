"""Command-line front end: ``python -m pretzel_jones <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .diagram import PretzelSpec, bracket_brute, pretzel_pd
from .errors import KnotError, ParseError
from .pretzel import IDENTITIES, bracket_fast, check_identity, jones
from .search import (
    CONVENTIONS,
    DEFAULT_CONVENTION,
    compositions,
    count_knots,
    find_jones_collisions,
    write_report,
)

_SPEC_RE = re.compile(r"\s*(?:(\d+)\s*;)?\s*(\d+(?:\s*,\s*\d+)*)\s*$")


def parse_spec(text: str) -> PretzelSpec:
    """Parse ``[m;]p1,p2,...``; the m prefix adds m leading 1-columns."""
    match = _SPEC_RE.match(text)
    if not match:
        pos = _first_bad_position(text)
        raise ParseError(f"cannot parse pretzel spec {text!r}", pos)
    m = int(match.group(1) or 0)
    ps = [int(v) for v in match.group(2).split(",")]
    if any(p < 1 for p in ps):
        raise ParseError(f"column twist counts must be positive in {text!r}")
    return PretzelSpec.shorthand(m, *ps)


def _first_bad_position(text: str) -> int:
    seen_semicolon = False
    for i, ch in enumerate(text):
        if ch.isdigit() or ch in " ,":
            continue
        if ch == ";" and not seen_semicolon:
            seen_semicolon = True
            continue
        return i
    return len(text)


def _spec_arg(text: str) -> PretzelSpec:
    try:
        return parse_spec(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _poly_output(poly, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(poly.to_json())
    return poly.render()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pretzel-jones", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def with_format(p, choices=("text", "json")):
        p.add_argument("--format", choices=choices, default="text")

    p = sub.add_parser("bracket", help="Kauffman bracket of a pretzel diagram")
    p.add_argument("--spec", type=_spec_arg, required=True)
    p.add_argument("--brute", action="store_true", help="use the state-sum oracle")
    with_format(p)

    p = sub.add_parser("jones", help="Jones polynomial of a pretzel knot")
    p.add_argument("--spec", type=_spec_arg, required=True)
    with_format(p)

    p = sub.add_parser("verify", help="check a polynomial identity")
    p.add_argument("--identity", choices=sorted(IDENTITIES), required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)

    for name, helptext in (("search", "find Jones collisions"), ("count", "count knot tuples")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--max-crossings", type=int, required=True)
        p.add_argument("--convention", choices=CONVENTIONS, default=DEFAULT_CONVENTION)
        if name == "search":
            p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
            with_format(p, ("text", "json", "csv"))

    p = sub.add_parser("oracle-check", help="compare the fast bracket to the state sum")
    p.add_argument("--max", "--max-crossings", dest="max_crossings", type=int, default=14)
    return parser


def _oracle_check(max_crossings: int, out) -> bool:
    ok = True
    checked = 0
    for total in range(1, max_crossings + 1):
        for cols in compositions(total):
            checked += 1
            if bracket_fast(cols) != bracket_brute(pretzel_pd(cols)):
                print(f"MISMATCH {cols}", file=out)
                ok = False
    print(f"{'OK' if ok else 'FAIL'} {checked} specs", file=out)
    return ok


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.command == "bracket":
            poly = bracket_brute(pretzel_pd(args.spec)) if args.brute else bracket_fast(args.spec)
            print(_poly_output(poly, args.format), file=stdout)
        elif args.command == "jones":
            print(_poly_output(jones(args.spec), args.format), file=stdout)
        elif args.command == "verify":
            needed = IDENTITIES[args.identity][0]
            params = {name: getattr(args, name) for name in needed}
            missing = [name for name, v in params.items() if v is None]
            if missing:
                print(f"BadParams: {args.identity} needs --{' --'.join(missing)}", file=stderr)
                return 2
            ok = check_identity(args.identity, **params)
            print("OK" if ok else "FAIL", file=stdout)
            return 0 if ok else 1
        elif args.command == "count":
            print(count_knots(args.max_crossings, args.convention), file=stdout)
        elif args.command == "search":
            report = find_jones_collisions(
                args.max_crossings,
                args.convention,
                jobs=args.jobs,
                progress=lambda n: print(f"... {n} tuples", file=stderr, flush=True),
            )
            print(write_report(report, args.format), file=stdout)
        elif args.command == "oracle-check":
            return 0 if _oracle_check(args.max_crossings, stdout) else 1
    except KnotError as exc:
        print(f"{type(exc).__name__}: {exc}", file=stderr)
        return 1
    return 0


def main():
    sys.exit(run())
