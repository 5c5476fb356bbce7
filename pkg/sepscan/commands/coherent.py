"""coherent: coherent-vector diagnostics for one block."""

import argparse

from sepscan.helpers.report_helper import render_coherent
from sepscan.helpers.statefile_helper import load_state_file
from sepscan.models.state import Subsystem
from sepscan.services.report_service import ReportService


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "coherent",
        parents=parents,
        help="print the coherent vector, its norm and the residual for a block",
    )
    parser.add_argument("path", help="state file")
    parser.add_argument(
        "--block", required=True, help="comma-separated 1-based labels, e.g. 3,4"
    )
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    block = Subsystem.parse(args.block)
    state, _ = load_state_file(args.path)
    report = ReportService(tolerance=args.tolerance).coherent_report(state, block)

    print(report.model_dump_json(indent=2) if args.json else render_coherent(report))
    return 0
