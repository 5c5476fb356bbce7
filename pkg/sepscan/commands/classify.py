"""classify: factorization report for one state file."""

import argparse

from sepscan.helpers.report_helper import render_report
from sepscan.helpers.statefile_helper import load_state_file
from sepscan.services.report_service import ReportService

EXIT_DISAGREEMENT = 2


def get_report_service(args: argparse.Namespace) -> ReportService:
    """Get ReportService instance configured from the command line."""
    return ReportService(tolerance=args.tolerance)


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "classify",
        parents=parents,
        help="factor a state into entangled blocks and report every cut",
    )
    parser.add_argument("path", help="state file (JSON, qubit 1 = most significant bit)")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    state, label = load_state_file(args.path)
    report = get_report_service(args).build_report(state, label=label)

    print(report.model_dump_json(indent=2) if args.json else render_report(report))
    return EXIT_DISAGREEMENT if report.disagreement else 0
