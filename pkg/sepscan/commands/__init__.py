"""CLI subcommands, one module each."""

from sepscan.commands import classify, coherent, fuzz, table3

COMMANDS = [classify, table3, coherent, fuzz]

__all__ = ["COMMANDS"]
