#!/usr/bin/env python

import argparse
import logging
import sys

from lanq.scripts import check_script as check
from lanq.scripts import run_script as run

EXAMPLE_USAGE = """
Example usage for type checking:
    lanq check teleportation.lq

Example usage for running:
    lanq run rng.lq --policy exhaustive

Example usage for running with a seed and a trace:
    lanq run rng.lq --branch sample --seed 7 --trace rng.jsonl --emit-rho

Exit codes:
    0 success, 1 type error, 2 lexical, syntax or method definition error,
    3 runtime error in some outcome, 4 deadlock, 5 step limit
"""


def cli(argv=None):
    parser = argparse.ArgumentParser(
        prog='lanq',
        description="Type check and run LanQ programs.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EXAMPLE_USAGE
    )
    parser.add_argument(
        '-v', '--verbose', action='count', default=0,
        help='Log more detail: once for INFO, twice for DEBUG.'
    )
    subparsers = parser.add_subparsers(dest='command')

    check.create_parser(subparsers)
    run.create_parser(subparsers)

    argv = sys.argv[1:] if argv is None else argv
    if not argv:  # Print out the help message if no arguments are given.
        parser.print_help(sys.stderr)
        sys.exit(1)

    parameters = parser.parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(parameters.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s')

    if parameters.command == 'check':
        sys.exit(check.run(parameters.program, parameters))
    elif parameters.command == 'run':
        sys.exit(run.run(parameters.program, parameters))
    else:
        parser.print_help()
        sys.exit(1)
