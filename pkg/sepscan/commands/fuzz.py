"""fuzz: criterion against oracle on random states."""

import argparse

from sepscan.helpers.report_helper import render_fuzz
from sepscan.services.report_service import ReportService

EXIT_DISAGREEMENT = 2


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "fuzz",
        parents=parents,
        help="compare criterion and oracle on random and block-product states",
    )
    parser.add_argument("-n", "--qubits", type=int, required=True, help="qubit count, 2..8")
    parser.add_argument("--trials", type=int, default=1000, help="number of states")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    summary = ReportService(tolerance=args.tolerance).fuzz(
        args.qubits, args.trials, args.seed
    )

    print(summary.model_dump_json(indent=2) if args.json else render_fuzz(summary))
    return EXIT_DISAGREEMENT if summary.disagreements else 0
