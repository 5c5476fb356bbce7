"""table3: regenerate the three-qubit classification table."""

import argparse
import json

from sepscan.configs.settings import settings
from sepscan.data import GOLDEN_TABLE_PATH
from sepscan.helpers.table_helper import load_golden, render_table
from sepscan.services.classification_service import ClassificationService

EXIT_MISMATCH = 2


def get_classification_service(args: argparse.Namespace) -> ClassificationService:
    """Get ClassificationService instance configured from the command line."""
    return ClassificationService(tolerance=args.tolerance)


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "table3",
        parents=parents,
        help="classify all 255 supports of a three-qubit state",
    )
    parser.add_argument(
        "--draws",
        type=int,
        default=settings.table_draws,
        help="coefficient draws per support and per branch",
    )
    parser.add_argument(
        "--golden",
        nargs="?",
        const=str(GOLDEN_TABLE_PATH),
        default=None,
        help="compare with a golden table (bundled one when no path is given)",
    )
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    service = get_classification_service(args)
    table = service.generate_table_3q(draws=args.draws, seed=args.seed)

    mismatches = None
    if args.golden is not None:
        mismatches = service.compare_with_golden(table, load_golden(args.golden))

    if args.json:
        payload = {"table": table.model_dump(mode="json")}
        if mismatches is not None:
            payload["mismatches"] = mismatches
        print(json.dumps(payload, indent=2))
    else:
        print(render_table(table, mismatches))

    if mismatches or table.sampling_failures:
        return EXIT_MISMATCH
    return 0
