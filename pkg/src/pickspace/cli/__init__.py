"""Command line front-end of the toolkit."""

import argparse
import sys
from collections.abc import Sequence

from pydantic import ValidationError

from ..config.settings import LogLevel, get_settings
from ..core.errors import VALIDATION_EXIT_CODE, PickSpaceError, handle_numerical_error
from ..utils.logging import configure_logging, setup_logging
from .commands import COMMANDS
from .output import emit

logger = setup_logging(__name__)

FILE_COMMANDS = {
    "classify": "Run the six criteria and report their verdicts",
    "delta": "Print the matrix of delta distances",
    "dual": "Print the dual Gram matrix",
    "model": "Print the model space Gram matrix of zeros in the disk",
    "orthogonalize": "Find an r-orthogonality witness and the rescaled Gram matrix",
    "extremal": "Print the extremal multiplier vanishing at every other point",
    "geodesic": "Test whether the points lie in one complex geodesic",
    "realize": "Realize a complete Pick Gram matrix by points of a ball",
    "probe-dual": "Test whether the dual space is in F and in the model class",
}


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="write one JSON document")
    parser.add_argument("--tol-psd", type=float, default=None, help="relative eigenvalue floor")
    parser.add_argument("--tol-rankone", type=float, default=None, help="rank-one tolerance")
    parser.add_argument("--tol-match", type=float, default=None, help="equality tolerance")
    parser.add_argument(
        "--log-level",
        type=LogLevel,
        choices=list(LogLevel),
        default=None,
        help="log level on standard error",
    )


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per operation.

    Returns:
        argparse.ArgumentParser: Parser
    """
    parser = argparse.ArgumentParser(
        prog="pickspace",
        description="Decide whether a finite complete Pick space is a rescaled model space.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    for name, help_text in FILE_COMMANDS.items():
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("file", nargs="?", default="-", help='input document, "-" for stdin')
        _add_common(sub)
        if name == "extremal":
            sub.add_argument("--base", type=int, default=1, help="1-based distinguished index")

    congruent = subparsers.add_parser("congruent", help="Test two point sets for congruence")
    congruent.add_argument("first", help="first points document")
    congruent.add_argument("second", help="second points document")
    _add_common(congruent)

    gen = subparsers.add_parser("gen", help="Generate a reproducible random points document")
    kind = gen.add_mutually_exclusive_group(required=True)
    kind.add_argument("--geodesic", action="store_true", help="points on one complex geodesic")
    kind.add_argument("--generic", action="store_true", help="points far from any geodesic")
    gen.add_argument("--n", type=int, default=4, help="number of points")
    gen.add_argument("--m", type=int, default=2, help="ambient dimension")
    gen.add_argument("--seed", type=int, default=0, help="random seed")
    gen.add_argument("--margin", type=float, default=None, help="minimum geodesic margin")
    _add_common(gen)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Run one command and write its report to standard output.

    Args:
        argv: Arguments without the program name, sys.argv[1:] by default

    Returns:
        int: Exit code, 0 on success, 2 for invalid input, 3 for numerical failures
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        settings = get_settings()
    except ValidationError as e:
        print(f"error: invalid settings: {e!s}", file=sys.stderr)
        return VALIDATION_EXIT_CODE
    configure_logging(settings, args.log_level)

    logger.info(f"Running {args.command}")
    try:
        result = COMMANDS[args.command](args)
    except PickSpaceError as e:
        logger.error(f"{args.command} failed: {e!s}")
        print(f"error: {e!s}", file=sys.stderr)
        return e.exit_code
    except ValidationError as e:
        logger.error(f"{args.command} failed: {e!s}")
        print(f"error: {e!s}", file=sys.stderr)
        return VALIDATION_EXIT_CODE
    except Exception as e:
        error = handle_numerical_error(e, args.command)
        print(f"error: {error!s}", file=sys.stderr)
        return error.exit_code

    # gen output is meant to be piped into the other commands
    as_json = args.json or args.command == "gen"
    emit(result, as_json, settings.significant_digits, sys.stdout)
    return 0


def main() -> None:
    """Console script entry point."""
    sys.exit(run())
