"""Integration test fixtures and configuration."""

from collections import namedtuple

import pytest

from sepscan.cli import main
from sepscan.helpers.statefile_helper import dump_state_file

CliResult = namedtuple("CliResult", ["exit_code", "stdout", "stderr"])


@pytest.fixture(scope="function")
def run_cli(capsys):
    """Run the command line in-process and capture its output."""

    def run(*argv: str) -> CliResult:
        try:
            exit_code = main([str(arg) for arg in argv])
        except SystemExit as exc:
            exit_code = exc.code
        captured = capsys.readouterr()
        return CliResult(exit_code, captured.out, captured.err)

    return run


@pytest.fixture(scope="function")
def state_file(tmp_path):
    """Write a state to a JSON file under tmp_path and return its path."""

    def write(state, name: str = "state.json", label=None):
        path = tmp_path / name
        dump_state_file(state, path, label=label)
        return path

    return write
