""" main.py -- Command-line entry point for Pythagoras.

    Language: Python 3.9
"""

from typing import List, Optional
import argparse
import json
import logging
import sys

from pythagoras import config
from pythagoras.func import commands as orders
from pythagoras.utils import logger
from pythagoras.utils.exceptions import DomainError, UsageError


def build_parser() -> argparse.ArgumentParser:
    """Read the command info file and register every command."""
    with open(config.COMMAND_INFO_FILE, "r") as f:
        command_info = json.loads(f.read())
    parser = argparse.ArgumentParser(
        prog="pythagoras",
        description="Compute and cross-check generalizations of the Pythagorean theorem.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {config.PYTHAGORAS_VERSION}"
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    orders.setup(subparsers, command_info)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run the command and return its exit status.

    Parameters
    ----------
    argv: List[str]
        Arguments without the program name. sys.argv[1:] is used if None.
        (Optional) Defaults to: None

    Returns
    ----------
    int
        0 on success, 1 on a verification failure, 2 on a usage error.
    """
    logger.initialize(debug=config.DEBUG)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 0 for --help/--version and 2 for bad arguments.
        return 0 if e.code is None else int(e.code)
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return 2

    logging.debug(f"Running '{args.command}' with {vars(args)}.")
    try:
        return args.func(args)
    except (UsageError, DomainError) as e:
        logging.debug(f"'{args.command}' rejected its input: {e.__class__.__name__}.")
        print(f"pythagoras {args.command}: error: {e}", file=sys.stderr)
        return 2
