"""Command-line entry point for the two-detector alpha-vacuum metrology toolkit"""

import argparse
import logging
import sys
from typing import List, Optional

from app.commands import cmd_figures, cmd_peak, cmd_point, cmd_sweep, cmd_verify

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def _add_point_flags(parser: argparse.ArgumentParser, required: bool) -> None:
    parser.add_argument("--omega", type=float, required=required, help="Detector energy spacing")
    parser.add_argument("--beta", type=float, required=required, help="Inverse Gibbons-Hawking temperature")
    parser.add_argument("--alpha", type=float, required=required, help="|alpha| of the vacuum (alpha = -value)")
    parser.add_argument("--tau", type=float, required=required, help="Initial-state constant in [-3, 1]")


def build_parser() -> argparse.ArgumentParser:
    """Parser with the point, sweep, peak, figures and verify subcommands"""
    parser = argparse.ArgumentParser(
        prog="detector-metrology",
        description="Equilibrium QFI and LQU of two detectors in de Sitter alpha-vacua"
    )
    parser.add_argument("--log-level", choices=LOG_LEVELS, default="INFO", help="Logging level (stderr)")
    subparsers = parser.add_subparsers(dest="command", required=True)

    point = subparsers.add_parser("point", help="Evaluate one parameter point")
    _add_point_flags(point, required=True)
    point.set_defaults(handler=cmd_point)

    sweep = subparsers.add_parser("sweep", help="Sweep one parameter and write CSV")
    _add_point_flags(sweep, required=False)
    sweep.add_argument("--param", required=True, choices=("beta", "alpha_abs", "omega", "tau"))
    sweep.add_argument("--from", dest="start", type=float, required=True)
    sweep.add_argument("--to", dest="stop", type=float, required=True)
    sweep.add_argument("--steps", type=int, required=True)
    sweep.add_argument("--scale", choices=("linear", "log"), default="linear")
    sweep.add_argument("--out", default=None, help="CSV file; standard output when omitted")
    sweep.set_defaults(handler=cmd_sweep)

    peak = subparsers.add_parser("peak", help="Locate the QFI maximum along beta")
    peak.add_argument("--omega", type=float, required=True)
    peak.add_argument("--alpha", type=float, required=True, help="|alpha| of the vacuum")
    peak.add_argument("--tau", type=float, required=True)
    peak.add_argument("--from", dest="start", type=float, default=0.05)
    peak.add_argument("--to", dest="stop", type=float, default=30.0)
    peak.add_argument("--tol", type=float, default=None, help="Absolute tolerance on beta_star")
    peak.set_defaults(handler=cmd_peak)

    figures = subparsers.add_parser("figures", help="Emit the CSV data of every figure curve")
    figures.add_argument("--out-dir", default="figures")
    figures.set_defaults(handler=cmd_figures)

    verify = subparsers.add_parser("verify", help="Run the oracle suite")
    verify.add_argument("--tol", type=float, default=1.0, help="Multiplier applied to every check tolerance")
    verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, configure logging and dispatch to a command.

    Returns:
        Exit code: 0 success, 1 runtime or verification failure, 2 invalid arguments
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr
    )
    logger.debug(f"Running {args.command}")
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
