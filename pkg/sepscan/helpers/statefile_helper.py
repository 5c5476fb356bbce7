"""Reading and writing state files."""

import hashlib
import json
from pathlib import Path
from typing import Optional, Union

from sepscan.configs.settings import settings
from sepscan.models.report import StateFile
from sepscan.models.state import PureState


def state_to_file(state: PureState, label: Optional[str] = None) -> StateFile:
    return StateFile(
        n=state.n,
        label=label,
        amplitudes=[(float(z.real), float(z.imag)) for z in state.amplitudes],
    )


def file_to_state(state_file: StateFile) -> PureState:
    """Validate the size cap and build the (renormalized) state."""
    if state_file.n > settings.max_qubits:
        raise ValueError(
            f"state has {state_file.n} qubits; the limit is {settings.max_qubits} "
            f"(SEPSCAN_MAX_QUBITS)"
        )
    return PureState(
        n=state_file.n, amplitudes=[complex(re, im) for re, im in state_file.amplitudes]
    )


def load_state_file(path: Union[str, Path]) -> tuple[PureState, Optional[str]]:
    """
    Loads a state file from disk.

    Args:
        path: JSON file with ``n``, optional ``label`` and ``amplitudes`` as [re, im] pairs.

    Returns:
        The validated state and the file's label.
    """
    text = Path(path).read_text(encoding="utf-8")
    state_file = StateFile.model_validate_json(text)
    return file_to_state(state_file), state_file.label


def dump_state_file(
    state: PureState, path: Union[str, Path], label: Optional[str] = None
) -> None:
    Path(path).write_text(
        state_to_file(state, label).model_dump_json(indent=2) + "\n", encoding="utf-8"
    )


def input_digest(state: PureState) -> str:
    """SHA-256 of the amplitudes as compact JSON [re, im] pairs."""
    pairs = [[float(z.real), float(z.imag)] for z in state.amplitudes]
    canonical = json.dumps(pairs, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()
