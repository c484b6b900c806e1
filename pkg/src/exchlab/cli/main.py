"""ExchLab command line: verify, construct, search, dims.

Exit status: 0 when every verdict passes, 1 when a verdict fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence

from tabulate import tabulate

from exchlab.checks.exchangeability import verify
from exchlab.cli.schemas import (
    DimsResponse,
    DistributionModel,
    ReportModel,
    SearchResponse,
    VerifyResponse,
)
from exchlab.config import get_settings
from exchlab.constructions.omega import OMEGA_ALPHABET
from exchlab.constructions.registry import (
    CONSTRUCTIONS,
    VALID_CONSTRUCTIONS,
    build_construction,
)
from exchlab.dist.core import nontrivial_colorings, pushforward
from exchlab.dist.textio import STDIO, dump_distribution, load_distribution, write_distribution
from exchlab.dist.types import Alphabet, JointDistribution, format_outcome
from exchlab.linalg.rational import format_rational
from exchlab.search.constraints import SupportSpec, full_support, omega_support
from exchlab.search.gap import find_gap_witness, gap_dimensions

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2
MAX_TABLE_ROWS = 64
# options whose values may start with '-' (negative symbols)
_SIGNED_VALUE_OPTIONS = ("--alphabet",)


def _parse_alphabet(text: str) -> Alphabet:
    try:
        return Alphabet(tuple(int(token) for token in text.split(",")))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid alphabet '{text}': {exc}") from None


def _construction_help() -> str:
    entries = zip(VALID_CONSTRUCTIONS, CONSTRUCTIONS.values(), strict=True)
    return "; ".join(f"{label}: {config.description}" for label, config in entries)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="exchlab", description=__doc__.splitlines()[0])
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=None,
        help="Logging level for stderr diagnostics",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    verify_cmd = commands.add_parser("verify", help="Check a distribution file")
    verify_cmd.add_argument("path", help="Distribution file, '-' for stdin")
    verify_cmd.add_argument(
        "--mode",
        default="both",
        choices=["exchangeable", "two-color", "both"],
    )
    verify_cmd.add_argument(
        "--table",
        action="store_true",
        help="Also print the pushforward masses under each representative coloring",
    )
    verify_cmd.add_argument("--json", action="store_true")

    construct_cmd = commands.add_parser("construct", help="Emit a named counterexample")
    construct_cmd.add_argument("name", help=_construction_help())
    construct_cmd.add_argument("--output", default=STDIO, help="Output file, '-' for stdout")

    for name, help_text in (
        ("search", "Build a two-color exchangeable law that is not exchangeable"),
        ("dims", "Report solution-space dimensions of the two constraint systems"),
    ):
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("--alphabet", type=_parse_alphabet, default=OMEGA_ALPHABET)
        sub.add_argument("--n", type=int, required=True)
        sub.add_argument("--support", choices=["full", "omega"], default="full")
        sub.add_argument("--json", action="store_true")
        if name == "search":
            sub.add_argument("--output", default=STDIO, help="Witness file, '-' for stdout")
    return parser


def _join_signed_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--alphabet -1,0,1`` into ``--alphabet=-1,0,1`` so argparse keeps the value."""

    joined: list[str] = []
    index = 0
    while index < len(argv):
        token = argv[index]
        if token in _SIGNED_VALUE_OPTIONS and index + 1 < len(argv):
            joined.append(f"{token}={argv[index + 1]}")
            index += 2
            continue
        joined.append(token)
        index += 1
    return joined


def _support_spec(args: argparse.Namespace) -> SupportSpec:
    if args.support == "omega":
        if args.alphabet != OMEGA_ALPHABET:
            raise ValueError("--support omega requires --alphabet -1,0,1")
        return omega_support(args.n)
    return full_support(args.alphabet, args.n)


def _coloring_tables(distribution: JointDistribution) -> str:
    blocks = []
    full_cube = 2**distribution.n <= MAX_TABLE_ROWS
    binary = Alphabet.binary()
    for coloring in nontrivial_colorings(distribution.alphabet):
        image = pushforward(distribution, coloring)
        outcomes = binary.outcomes(distribution.n) if full_cube else image.support()
        rows = [
            [format_outcome(outcome), format_rational(image.mass(outcome))]
            for outcome in outcomes
        ]
        table = tabulate(rows, headers=["outcome", "mass"], tablefmt="simple")
        blocks.append(f"coloring: {coloring.label()}\n{table}")
    return "\n\n".join(blocks)


def _cmd_verify(args: argparse.Namespace) -> int:
    distribution = load_distribution(args.path)
    reports = verify(distribution, args.mode)
    if args.json:
        payload = VerifyResponse(reports=[ReportModel.from_report(r) for r in reports])
        print(payload.model_dump_json(indent=2))
    else:
        print("\n\n".join(report.to_text() for report in reports))
        if args.table:
            print()
            print(_coloring_tables(distribution))
    return EXIT_PASS if all(report.verdict for report in reports) else EXIT_FAIL


def _cmd_construct(args: argparse.Namespace) -> int:
    dump_distribution(build_construction(args.name), args.output)
    return EXIT_PASS


def _cmd_dims(args: argparse.Namespace) -> int:
    dims = gap_dimensions(_support_spec(args))
    if args.json:
        print(DimsResponse.from_dims(dims).model_dump_json(indent=2))
    else:
        print(dims.to_text())
    return EXIT_PASS


def _cmd_search(args: argparse.Namespace) -> int:
    spec = _support_spec(args)
    dims = gap_dimensions(spec)
    witness = find_gap_witness(spec) if dims.has_gap else None
    if args.json:
        payload = SearchResponse(
            dims=DimsResponse.from_dims(dims),
            witness=DistributionModel.from_distribution(witness) if witness else None,
        )
        print(payload.model_dump_json(indent=2))
        if witness is not None and args.output != STDIO:
            dump_distribution(witness, args.output)
        return EXIT_PASS
    print(dims.to_text())
    if witness is None:
        print("no gap")
    elif args.output == STDIO:
        sys.stdout.write(write_distribution(witness))
    else:
        dump_distribution(witness, args.output)
    return EXIT_PASS


_COMMANDS = {
    "verify": _cmd_verify,
    "construct": _cmd_construct,
    "search": _cmd_search,
    "dims": _cmd_dims,
}


def run(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, dispatch one subcommand, and return the exit status."""

    parser = _build_parser()
    try:
        args = parser.parse_args(_join_signed_values(sys.argv[1:] if argv is None else argv))
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_PASS

    logging.basicConfig(
        level=args.log_level or get_settings().log_level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError, RuntimeError) as exc:
        logger.debug("Command %s failed", args.command, exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:  # pragma: no cover - console entry point
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
