"""Bundled reference data."""

from pathlib import Path

DATA_DIR = Path(__file__).parent
GOLDEN_TABLE_PATH = DATA_DIR / "table3_golden.json"
