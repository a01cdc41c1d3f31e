"""
Main entry point for the readcodes toolkit
"""
import sys
import os
import argparse
from typing import List, Optional

# Add the project root to the Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from config.config import get_config
from src.cli.commands import COMMANDS, FORMATS, registered_checks
from src.codes.families import Family
from src.core.logger import setup_logger, get_logger
from src.core.exceptions import ReadCodeError

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def setup_application(log_level: Optional[str] = None):
    """Initialize logging from configuration and flags"""
    config = get_config()
    logger = setup_logger(
        log_file=config.LOG_FILE or None,
        level=log_level or config.LOG_LEVEL,
    )
    logger.debug(f"Configuration loaded: {config}")
    return config, logger


def _add_family_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--family', type=str, help=f"Code family ({', '.join(f.value for f in Family)})")
    parser.add_argument('--P', type=int, help='Override the window/run parameter P')
    parser.add_argument('--T', type=int, help='Override the good-sequence threshold T (c33)')
    parser.add_argument('--d', type=int, help='Override the target distance d (bounded)')
    parser.add_argument('--moduli', type=str, help='Override the moduli, comma-separated')
    parser.add_argument('--residues', type=str, help='Residues, comma-separated; default: best residues')
    parser.add_argument('--strategy', choices=['joint', 'independent'], help='Residue search strategy')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='readcodes',
        description="Constructions, characterizations and bounds for l-read codes"
    )
    parser.add_argument('--log-level', type=str, default=None, help='Logging level (default: READCODE_LOG_LEVEL)')
    parser.add_argument('--workers', type=int, default=None, help='Worker threads (default: READCODE_WORKERS)')
    parser.add_argument('--budget', type=int, default=None, help='Enumeration budget (default: READCODE_BUDGET)')

    subparsers = parser.add_subparsers(dest='command', required=True)

    read = subparsers.add_parser('read', help='Print the l-read vector of a word')
    read.add_argument('--q', type=int, required=True)
    read.add_argument('--ell', type=int, default=2)
    read.add_argument('--word', type=str, required=True)

    for name, help_text in (('dist', 'Read and Hamming distance of two words'),
                            ('decompose', 'Confusability structure of two words')):
        pair = subparsers.add_parser(name, help=help_text)
        pair.add_argument('--q', type=int, required=True)
        pair.add_argument('--ell', type=int, default=2)
        pair.add_argument('--x', type=str, required=True)
        pair.add_argument('--y', type=str, required=True)

    check = subparsers.add_parser('check', help='Test code membership of a word')
    check.add_argument('--q', type=int, required=True)
    check.add_argument('--ell', type=int, default=2)
    check.add_argument('--word', type=str, required=True)
    _add_family_flags(check)

    enum = subparsers.add_parser('enum', help='Enumerate a code')
    enum.add_argument('--q', type=int, required=True)
    enum.add_argument('--ell', type=int, default=2)
    enum.add_argument('--n', type=int, required=True)
    enum.add_argument('--best', action='store_true', help='Use the residues of the largest code (default)')
    _add_family_flags(enum)

    verify = subparsers.add_parser('verify', help='Run an exhaustive verification sweep')
    verify.add_argument('--check', type=str, choices=registered_checks())
    verify.add_argument('--q', type=str, default='2', help='Alphabet sizes, comma-separated')
    verify.add_argument('--ell', type=str, default='2', help='Read lengths, comma-separated')
    verify.add_argument('--nmin', type=int, default=1)
    verify.add_argument('--nmax', type=int, default=6)
    verify.add_argument('--radii', type=str, help='(t, d) pairs as t:d, comma-separated')
    verify.add_argument('--caps', type=str, help='Alternating-run caps, comma-separated')
    verify.add_argument('--families', type=str, help='Families for the family check, comma-separated')
    verify.add_argument('--n', type=int, help='Word length for --family verification')
    _add_family_flags(verify)

    bounds = subparsers.add_parser('bounds', help='Print redundancy bounds')
    bounds.add_argument('--q', type=int, required=True)
    bounds.add_argument('--n', type=int, required=True)
    bounds.add_argument('--ell', type=int, default=2)
    bounds.add_argument('--t', type=int)
    bounds.add_argument('--d', type=int)
    bounds.add_argument('--format', choices=FORMATS, default='csv')

    table = subparsers.add_parser('table', help='Code sizes and redundancies over a range of n')
    table.add_argument('--families', type=str, required=True, help='Families, comma-separated')
    table.add_argument('--q', type=int, default=2)
    table.add_argument('--ell', type=int, default=2)
    table.add_argument('--n', type=str, required=True, help='A..B[:STEP]')
    table.add_argument('--format', choices=FORMATS, default='csv')
    table.add_argument('--P', type=int)
    table.add_argument('--d', type=int)

    for sub in subparsers.choices.values():
        sub.add_argument('--out', type=str, help='Write output to this file instead of standard output')
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main function with command line argument parsing"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        setup_application(args.log_level)
        return COMMANDS[args.command](args)
    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        return EXIT_OK
    except ReadCodeError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        get_logger(__name__).debug("Unhandled exception", exc_info=True)
        print(f"Unexpected error: {e}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
