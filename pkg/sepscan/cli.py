"""Command-line parser factory and entry point."""

import argparse
import logging
import sys
from typing import Optional, Sequence

from sepscan.commands import COMMANDS
from sepscan.configs.settings import settings

logger = logging.getLogger(__name__)

EXIT_INPUT_ERROR = 1


class SepscanArgumentParser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with the input-error status."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def create_parser() -> argparse.ArgumentParser:
    """Create and configure the argument parser."""

    common = SepscanArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument(
        "--tolerance",
        type=float,
        default=None,
        help=f"absolute threshold on ξ² residuals (default {settings.tolerance:g})",
    )
    common.add_argument("--seed", type=int, default=0, help="random seed")
    common.add_argument(
        "--log-level",
        default=settings.log_level,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="logging level",
    )

    parser = SepscanArgumentParser(
        prog=settings.app_name, description=settings.app_description
    )
    parser.add_argument("--version", action="version", version=settings.app_version)
    subparsers = parser.add_subparsers(
        dest="command", required=True, parser_class=SepscanArgumentParser
    )
    for command in COMMANDS:
        command.register(subparsers, [common])
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = create_parser().parse_args(argv)

    logging.basicConfig(level=args.log_level)
    logging.getLogger().setLevel(args.log_level)

    try:
        return args.handler(args)
    except (ValueError, OSError) as exc:
        logger.debug("%s failed", args.command, exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
