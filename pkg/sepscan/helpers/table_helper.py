import json
from pathlib import Path
from typing import Optional, Union

from sepscan.data import GOLDEN_TABLE_PATH
from sepscan.models.classification import SeparabilityClass, SupportClass, Table3

ENTANGLED_PARTS = {
    SeparabilityClass.FULLY_SEPARABLE: "-",
    SeparabilityClass.A_PART: "BC",
    SeparabilityClass.B_PART: "AC",
    SeparabilityClass.C_PART: "AB",
    SeparabilityClass.FULLY_ENTANGLED: "ABC",
}


def load_golden(path: Optional[Union[str, Path]] = None) -> dict:
    """Golden table bundled with the package, or one at ``path``."""
    with open(path or GOLDEN_TABLE_PATH, encoding="utf-8") as handle:
        golden = json.load(handle)
    if "groups" not in golden:
        raise ValueError(f"golden table {path} has no 'groups'")
    return golden


def render_row(row: SupportClass) -> str:
    """One line per support, e.g. ``2 | (a,g) | C-part | AB``."""
    line = (
        f"{row.number} | ({row.letters}) | {row.generic_label.value} | "
        f"{ENTANGLED_PARTS[row.generic_label]}"
    )
    for branch in row.branches:
        line += f" | or {branch.class_label.value} if {','.join(branch.conditions)}"
    return line


def render_table(table: Table3, mismatches: Optional[list[str]] = None) -> str:
    lines = ["number | support | class | entangled | branches"]
    lines += [render_row(row) for row in table.rows]
    lines.append(f"{len(table.rows)} rows, {table.draws} draws per case, seed {table.seed}")
    for failure in table.sampling_failures:
        lines.append(f"SAMPLING FAILURE: {failure}")
    if mismatches is not None:
        lines.append(f"golden comparison: {len(mismatches)} mismatches")
        lines += [f"MISMATCH: {mismatch}" for mismatch in mismatches]
    return "\n".join(lines)
