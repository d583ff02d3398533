"""Command-line front end.

Exit codes: 0 ok, 1 crosscheck mismatch, 2 bad input or violated
invariant, 3 unsupported engine/set combination, 4 enumeration ceiling.
Data goes to stdout, diagnostics to stderr.  ``SRCOMP_FORMAT`` changes the
default output format of ``count`` (``plain`` or ``json``).
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from collections.abc import Sequence
from dataclasses import asdict

from .engines import ENGINES, applicable_engines, count, try_count
from .errors import CeilingExceeded, PreconditionError, SetSyntaxError, UnsupportedInputError
from .lhrc import Lhrc, eval_dp, solve_closed
from .oracle import DEFAULT_CEILING, enumerate_compositions, iter_compositions
from .partset import parse_set
from .sequences import SEQUENCES, verify_bijections

FORMAT_ENV = "SRCOMP_FORMAT"
TRUNCATION_MARKER = "..."


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_count(args) -> int:
    s = parse_set(args.set)
    fmt = args.format or os.environ.get(FORMAT_ENV, "plain")
    if fmt not in ("plain", "json"):
        raise UsageError(f"unknown format {fmt!r}")
    report = count(s, args.n, args.engine)
    if fmt == "json":
        _emit_json(report.as_dict())
    else:
        print(report.count)
    return 0


def _show(c: tuple[int, ...]) -> str:
    return ",".join(map(str, c)) if c else "()"


def cmd_enumerate(args) -> int:
    s = parse_set(args.set)
    if args.limit is None:
        comps = enumerate_compositions(s, args.n, args.ceiling)
        truncated = False
    else:
        if args.limit < 0:
            raise UsageError("--limit must be nonnegative")
        comps = list(itertools.islice(iter_compositions(s, args.n), args.limit + 1))
        truncated = len(comps) > args.limit
        comps = comps[: args.limit]
    if args.format == "json":
        _emit_json([list(c) for c in comps])
        if truncated:
            print(f"truncated after {args.limit} compositions", file=sys.stderr)
    else:
        for c in comps:
            print(_show(c))
        if truncated:
            print(TRUNCATION_MARKER)
    return 0


def cmd_seq(args) -> int:
    fn = SEQUENCES[args.name]
    if args.name == "mfib":
        value = fn(args.m, args.n, args.method)
    else:
        if args.m is not None:
            raise UsageError("--m only applies to mfib")
        value = fn(args.n, args.method)
    print(value)
    return 0


def cmd_lhrc(args) -> int:
    rec = Lhrc(tuple(args.offsets), tuple(args.coeffs), tuple(args.init))
    solve = solve_closed if args.method == "closed" else eval_dp
    if args.n < 0:
        raise PreconditionError("n must be nonnegative")
    print(solve(rec, args.n))
    return 0


def cmd_crosscheck(args) -> int:
    s = parse_set(args.set)
    if args.max_n < 0:
        raise PreconditionError("--max-n must be nonnegative")
    available = applicable_engines(s)
    if args.engines is None:
        engines = available
    else:
        engines = [e.strip() for e in args.engines.split(",") if e.strip()]
        unknown = [e for e in engines if e not in ENGINES]
        if unknown:
            raise UsageError(f"unknown engines: {', '.join(unknown)}")
        unsupported = [e for e in engines if e not in available]
        if unsupported:
            raise UnsupportedInputError(f"{s} is not supported by: {', '.join(unsupported)}")
        engines = sorted(set(engines), key=ENGINES.index)
    counts, mismatches = {}, []
    for n in range(args.max_n + 1):
        values = {e: try_count(s, n, e) for e in engines}
        reference = next((v for v in values.values() if v is not None), None)
        counts[str(n)] = None if reference is None else str(reference)
        for e in sorted(values):
            if values[e] is not None and values[e] != reference:
                mismatches.append([n, e, str(values[e])])
    _emit_json(
        {
            "set_spec": str(s),
            "n_range": [0, args.max_n],
            "engines_compared": engines,
            "mismatches": mismatches,
            "verdict": "fail" if mismatches else "pass",
            "counts": counts,
        }
    )
    return 1 if mismatches else 0


def cmd_verify(args) -> int:
    verdicts = verify_bijections(args.max_n)
    _emit_json({"max_n": args.max_n, "verdicts": [asdict(v) for v in verdicts]})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="srcomp", description="Restricted integer compositions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count compositions of n with parts in a set")
    p.add_argument("--set", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--engine", choices=ENGINES + ("auto",), default="auto")
    p.add_argument("--format", choices=("plain", "json"))
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list compositions in lexicographic order")
    p.add_argument("--set", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--limit", type=int)
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    p.add_argument("--format", choices=("lines", "json"), default="lines")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("seq", help="evaluate a named integer sequence")
    p.add_argument("name", choices=sorted(SEQUENCES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--method", choices=("closed", "recurrence"), default="closed")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("lhrc", help="linear recurrences")
    lsub = p.add_subparsers(dest="action", required=True)
    q = lsub.add_parser("solve", help="evaluate f(n)")
    q.add_argument("--offsets", type=_int_list, required=True)
    q.add_argument("--coeffs", type=_int_list, required=True)
    q.add_argument("--init", type=_int_list, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--method", choices=("dp", "closed"), default="dp")
    q.set_defaults(func=cmd_lhrc)

    p = sub.add_parser("crosscheck", help="compare every applicable engine for n <= max-n")
    p.add_argument("--set", required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--engines", help="comma-separated subset of " + ",".join(ENGINES))
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("verify", help="empirical checks")
    vsub = p.add_subparsers(dest="what", required=True)
    q = vsub.add_parser("bijections", help="composition/sequence correspondences")
    q.add_argument("--max-n", type=int, default=30)
    q.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "seq" and args.name == "mfib" and args.m is None:
        args.m = 2
    try:
        return args.func(args)
    except UnsupportedInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CeilingExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (SetSyntaxError, PreconditionError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
