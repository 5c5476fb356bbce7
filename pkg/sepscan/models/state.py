"""State-related Pydantic models."""

from typing import Annotated, Any, Iterable, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from sepscan.configs.settings import settings

# 1-based position A_i of a qubit
QubitLabel = Annotated[int, Field(ge=1)]


def _frozen_array(values: Any, dtype: type) -> np.ndarray:
    array = np.array(values, dtype=dtype)
    array.setflags(write=False)
    return array


def format_labels(labels: Iterable[int]) -> str:
    """Render labels the way reports print them, e.g. ``{A1,A3}``."""
    return "{" + ",".join(f"A{label}" for label in labels) + "}"


class Subsystem(BaseModel):
    """Nonempty set of qubit labels, kept in ascending order."""

    model_config = ConfigDict(frozen=True)

    labels: tuple[QubitLabel, ...] = Field(description="Qubit labels in the block")

    @field_validator("labels")
    @classmethod
    def validate_labels(cls, labels: tuple[int, ...]) -> tuple[int, ...]:
        """Labels must be nonempty and distinct."""
        if not labels:
            raise ValueError("subsystem must contain at least one qubit label")
        if len(set(labels)) != len(labels):
            raise ValueError(f"subsystem labels must be distinct, got {labels}")
        return tuple(sorted(labels))

    @classmethod
    def of(cls, *labels: int) -> "Subsystem":
        return cls(labels=tuple(labels))

    @classmethod
    def parse(cls, spec: str) -> "Subsystem":
        """Parse a comma-separated, 1-based block spec such as ``"1,3"``."""
        parts = [part.strip() for part in spec.split(",") if part.strip()]
        if not parts:
            raise ValueError(f"empty block spec: {spec!r}")
        try:
            labels = tuple(int(part) for part in parts)
        except ValueError:
            raise ValueError(f"block spec must list integer labels, got {spec!r}")
        return cls(labels=labels)

    @property
    def size(self) -> int:
        return len(self.labels)

    def complement(self, labels: Iterable[int]) -> "Subsystem":
        """Labels of ``labels`` not in this block."""
        rest = tuple(sorted(set(labels) - set(self.labels)))
        return Subsystem(labels=rest)

    def describe(self) -> str:
        return format_labels(self.labels)


class PureState(BaseModel):
    """Normalized amplitude vector over n labeled qubits.

    Index k encodes the basis ket |α₁α₂…αₙ⟩ with k = Σ αⱼ·2^(n−j), so the
    qubit in slot 1 is the most significant bit. ``labels[j]`` names the
    original qubit held in slot j+1; fresh states use (1, …, n).
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: int = Field(description="Qubit count")
    amplitudes: np.ndarray = Field(description="2**n complex amplitudes")
    labels: tuple[QubitLabel, ...] = Field(
        default=(), description="Original qubit label held by each slot"
    )

    @model_validator(mode="before")
    @classmethod
    def validate_amplitudes(cls, data: Any) -> Any:
        """Check length and norm; renormalize when within tolerance of 1."""
        if not isinstance(data, dict):
            return data
        data = dict(data)
        amplitudes = np.array(data.get("amplitudes"), dtype=np.complex128).reshape(-1)
        n = data.get("n")
        if n is None:
            n = int(amplitudes.size).bit_length() - 1
        if n < 1:
            raise ValueError(f"qubit count must be at least 1, got {n}")
        if n > settings.hard_max_qubits:
            raise ValueError(
                f"qubit count {n} exceeds the dense cap of {settings.hard_max_qubits}"
            )
        if amplitudes.size != 2**n:
            raise ValueError(
                f"expected {2**n} amplitudes for n={n}, got {amplitudes.size}"
            )
        norm = float(np.linalg.norm(amplitudes))
        if norm == 0.0:
            raise ValueError("all-zero amplitude vector is not a state")
        if abs(norm - 1.0) > settings.normalization_tolerance:
            raise ValueError(
                f"state norm {norm:.12g} deviates from 1 by more than "
                f"{settings.normalization_tolerance:g}"
            )
        labels = tuple(data.get("labels") or range(1, n + 1))
        if len(labels) != n or len(set(labels)) != n:
            raise ValueError(f"need {n} distinct labels, got {labels}")
        data.update(
            n=n,
            amplitudes=_frozen_array(amplitudes / norm, np.complex128),
            labels=labels,
        )
        return data

    @classmethod
    def from_unnormalized(
        cls, amplitudes: Any, labels: Optional[Iterable[int]] = None
    ) -> "PureState":
        """Build a state from any nonzero amplitude vector."""
        vector = np.array(amplitudes, dtype=np.complex128).reshape(-1)
        norm = float(np.linalg.norm(vector))
        if norm == 0.0:
            raise ValueError("all-zero amplitude vector is not a state")
        return cls(
            amplitudes=vector / norm, labels=tuple(labels) if labels else ()
        )

    @property
    def dimension(self) -> int:
        return 2**self.n

    @property
    def tensor(self) -> np.ndarray:
        """Amplitudes as an n-axis (2, …, 2) tensor, one axis per slot."""
        return self.amplitudes.reshape((2,) * self.n)

    def slot_of(self, label: int) -> int:
        """0-based slot holding ``label``."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"label A{label} is not one of {format_labels(self.labels)}")

    def slots_of(self, block: Subsystem) -> list[int]:
        return [self.slot_of(label) for label in block.labels]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PureState):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(
            self.amplitudes, other.amplitudes
        )


class DensityMatrix(BaseModel):
    """Hermitian, unit-trace, positive semidefinite matrix on m labeled qubits."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    m: int = Field(description="Qubit count")
    entries: np.ndarray = Field(description="2**m x 2**m complex matrix")
    labels: tuple[QubitLabel, ...] = Field(
        default=(), description="Original qubit label held by each slot"
    )

    @model_validator(mode="before")
    @classmethod
    def validate_entries(cls, data: Any) -> Any:
        """Check shape, hermiticity, trace and spectrum."""
        if not isinstance(data, dict):
            return data
        data = dict(data)
        entries = np.array(data.get("entries"), dtype=np.complex128)
        m = data.get("m")
        if m is None:
            m = int(entries.shape[0]).bit_length() - 1
        if m < 1:
            raise ValueError(f"qubit count must be at least 1, got {m}")
        if m > settings.density_max_qubits:
            raise ValueError(
                f"density matrices are materialized only up to "
                f"{settings.density_max_qubits} qubits, got {m}"
            )
        if entries.shape != (2**m, 2**m):
            raise ValueError(
                f"expected a {2**m}x{2**m} matrix for m={m}, got {entries.shape}"
            )
        tolerance = settings.tolerance
        if np.max(np.abs(entries - entries.conj().T)) > tolerance:
            raise ValueError("density matrix is not Hermitian")
        trace = complex(np.trace(entries))
        if abs(trace - 1.0) > tolerance:
            raise ValueError(f"density matrix trace is {trace:.12g}, expected 1")
        if np.linalg.eigvalsh(entries).min() < -tolerance:
            raise ValueError("density matrix has a negative eigenvalue")
        labels = tuple(data.get("labels") or range(1, m + 1))
        if len(labels) != m or len(set(labels)) != m:
            raise ValueError(f"need {m} distinct labels, got {labels}")
        data.update(m=m, entries=_frozen_array(entries, np.complex128), labels=labels)
        return data

    @property
    def dimension(self) -> int:
        return 2**self.m

    def slot_of(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"label A{label} is not one of {format_labels(self.labels)}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DensityMatrix):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(
            self.entries, other.entries
        )
