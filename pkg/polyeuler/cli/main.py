"""Command line: ``seq`` prints tables, ``value`` one number, ``verify`` reports.

Exit status is 0 on success, 1 when a verification fails and 2 on bad
arguments. Data goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import asyncio
import logging
import re
import sys
from typing import List, Optional, Sequence, TextIO

from ..sequences import PUBLIC_FAMILIES, Convention, build_table, single_value
from ..shared.ranges import parse_range
from ..shared.rationals import allow_long_integers, canonical
from ..shared.seq_logging import Emoticons, configure_logging
from ..shared.tables import FORMATS
from ..theorem_verifier import THEOREMS, SweepRanges, run_suite, suite_passed
from ..theorem_verifier.suite import resolve

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

_VALUE_FLAGS = ("--n", "--k", "--N")
_NEGATIVE = re.compile(r"^-\d")


def _glue_negative_values(argv: Sequence[str]) -> List[str]:
    """``--k -4..0`` -> ``--k=-4..0`` so argparse does not read the value as an option."""
    out: List[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in _VALUE_FLAGS and i + 1 < len(argv) and _NEGATIVE.match(argv[i + 1]):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        out.append(token)
        i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyeuler",
        description="Exact poly-Euler, poly-Bernoulli and hypergeometric Euler numbers.",
    )
    parser.add_argument("--log-level", default=None, help="stderr log level (default: LOG_LEVEL or WARNING)")
    commands = parser.add_subparsers(dest="command", required=True)

    seq = commands.add_parser("seq", help="tabulate a family over ranges of n and k (or N)")
    seq.add_argument("family", choices=PUBLIC_FAMILIES)
    seq.add_argument("--n", required=True, help="index range, e.g. 1..7")
    seq.add_argument("--k", default=None, help="upper index range for poly families, e.g. -4..0")
    seq.add_argument("--N", default=None, help="N range for the hypergeometric families")
    seq.add_argument("--format", choices=FORMATS, default="md")
    seq.add_argument("--convention", choices=[c.value for c in Convention], default=None,
                     help="sign of B_1 for the bernoulli family (default: minus)")

    value = commands.add_parser("value", help="print a single value")
    value.add_argument("family", choices=PUBLIC_FAMILIES)
    value.add_argument("--n", type=int, required=True)
    value.add_argument("--k", type=int, default=None)
    value.add_argument("--N", type=int, default=None)
    value.add_argument("--convention", choices=[c.value for c in Convention], default=None)

    verify = commands.add_parser("verify", help="run one checker, or all of them")
    verify.add_argument("theorem", help=f"one of {', '.join(THEOREMS)}, or all")
    defaults = SweepRanges.defaults()
    verify.add_argument("--nmax", type=int, default=defaults.nmax)
    verify.add_argument("--kmax", type=int, default=defaults.kmax)
    verify.add_argument("--pmax", type=int, default=defaults.pmax)
    verify.add_argument("--Nmax", type=int, default=defaults.Nmax)
    verify.add_argument("--workers", type=int, default=None, help="thread pool size for verify all")
    return parser


def _optional_range(text: Optional[str]) -> Optional[range]:
    return None if text is None else parse_range(text)


def _cmd_seq(args: argparse.Namespace, out: TextIO) -> int:
    table = build_table(
        args.family,
        parse_range(args.n),
        ks=_optional_range(args.k),
        Ns=_optional_range(args.N),
        convention=args.convention,
    )
    out.write(table.render(args.format))
    return EXIT_OK


def _cmd_value(args: argparse.Namespace, out: TextIO) -> int:
    result = single_value(args.family, args.n, k=args.k, N=args.N, convention=args.convention)
    out.write(canonical(result) + "\n")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    try:
        theorem_ids = resolve(args.theorem)
    except KeyError:
        raise ValueError(f"unknown theorem {args.theorem!r}; expected one of {', '.join(THEOREMS)}, all")
    if args.workers is not None and args.workers < 1:
        raise ValueError(f"--workers must be >= 1, got {args.workers}")
    ranges = SweepRanges(nmax=args.nmax, kmax=args.kmax, pmax=args.pmax, Nmax=args.Nmax)

    reports = asyncio.run(run_suite(theorem_ids, ranges, args.workers))
    for report in reports:
        out.write(report.to_json() + "\n")
    return EXIT_OK if suite_passed(reports) else EXIT_FAILED


_COMMANDS = {"seq": _cmd_seq, "value": _cmd_value, "verify": _cmd_verify}


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_negative_values(sys.argv[1:] if argv is None else argv))
    except SystemExit as exc:
        return int(exc.code or 0)

    configure_logging(args.log_level)
    allow_long_integers()
    try:
        return _COMMANDS[args.command](args, out)
    except ValueError as exc:
        # PolyEulerError, pydantic ValidationError and range-grammar errors
        LOGGER.debug(f"{Emoticons.FAILED} Rejected arguments", extra={"Command": args.command})
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"{parser.prog} {args.command}: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
