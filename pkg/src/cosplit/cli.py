"""Command-line front end.

    cosplit verify sl --size M [--format text|json] [--no-timing]
    cosplit verify classical --family B|C|D --rank L [--format ...] [--no-timing]
    cosplit suite [--format ...] [--no-timing]

Exit status: 0 if every check passes, 1 on a verification failure,
2 on usage or configuration errors. COSPLIT_MAX_SIZE caps the sl_m size
(default 8).
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from .errors import InvalidRank
from .report import dumps, run_suite, verify_classical, verify_sl

DEFAULT_MAX_SIZE = 8
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def max_size() -> int:
    raw = os.environ.get("COSPLIT_MAX_SIZE")
    if raw is None:
        return DEFAULT_MAX_SIZE
    try:
        v = int(raw)
    except ValueError:
        raise InvalidRank(f"COSPLIT_MAX_SIZE must be an integer, got {raw!r}") from None
    if v < 2:
        raise InvalidRank(f"COSPLIT_MAX_SIZE must be at least 2, got {v}")
    return v


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--no-timing", action="store_true", help="omit wall-time fields (byte-stable output)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cosplit", description="Exact verification of co-split Lie algebra identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="verify one target")
    vsub = verify.add_subparsers(dest="target", required=True)
    sl = vsub.add_parser("sl", help="sl_m with its cobracket")
    sl.add_argument("--size", type=int, required=True, metavar="M")
    _add_output_flags(sl)
    cl = vsub.add_parser("classical", help="so/sp in their defining representation")
    cl.add_argument("--family", choices=("B", "C", "D"), required=True)
    cl.add_argument("--rank", type=int, required=True, metavar="L")
    _add_output_flags(cl)

    suite = sub.add_parser("suite", help="run every default target")
    _add_output_flags(suite)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cap = max_size()
        if args.command == "suite":
            report = run_suite(cap)
        elif args.target == "sl":
            if not 2 <= args.size <= cap:
                parser.error(f"--size must be between 2 and {cap}, got {args.size}")
            report = verify_sl(args.size)
        else:
            report = verify_classical(args.family, args.rank)
    except InvalidRank as exc:
        print(f"cosplit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    timing = not args.no_timing
    if args.format == "json":
        sys.stdout.write(dumps(report.to_json(timing)))
    else:
        sys.stdout.write(report.to_text(timing) + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
