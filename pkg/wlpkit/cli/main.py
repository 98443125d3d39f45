"""
Command line entry point: ``wlpkit <command> [options] FILE...``.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional

from .. import __version__
from ..wlp import router
from .app import Invocation
from .commands import create_app


def _options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("files", nargs="+", metavar="FILE", help="module specification file")
    common.add_argument(
        "--method",
        choices=router.methods,
        default=None,
        help="degree-pair decider (default: auto, the kernel-quotient algorithm)",
    )
    common.add_argument("--json", action="store_true", help="print JSON instead of text")
    common.add_argument("--witness", action="store_true", help="print the Lefschetz element")
    common.add_argument("--trace", action="store_true", help="print the decision trace")
    common.add_argument(
        "--form", metavar="LINEAR_FORM", help="test this linear form, e.g. 'x + 2*y'"
    )
    common.add_argument(
        "--debug",
        action="store_true",
        default=None,
        help="cross-check every degree pair with the pencil oracle, show tracebacks",
    )
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="log INFO (-v) or DEBUG (-vv)"
    )
    common.add_argument("--jobs", type=int, default=None, metavar="N", help="worker threads for check")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wlpkit",
        description="Decide the Weak Lefschetz Property of graded K[x,y]-modules.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    common = _options()
    commands.add_parser("check", parents=[common], help="verdict for each file")
    commands.add_parser("explain", parents=[common], help="verdict with witness, trace and certificates")
    commands.add_parser("oracle", parents=[common], help="verdict by the pencil oracle alone")
    commands.add_parser("gamma", parents=[common], help="determinant p(gamma) of square degree pairs")
    return parser


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(format="%(name)s:%(levelname)s:%(message)s", level=level)
    logging.getLogger("wlpkit").setLevel(level)


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit status."""
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    app = create_app(default_method=args.method or "auto", debug=args.debug, max_workers=args.jobs)
    result = app.handle(
        Invocation(
            command=args.command,
            paths=list(args.files),
            method=args.method,
            json=args.json,
            witness=args.witness,
            trace=args.trace,
            form=args.form,
            jobs=args.jobs,
        )
    )
    sys.stdout.write(result.stdout)
    sys.stderr.write(result.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
