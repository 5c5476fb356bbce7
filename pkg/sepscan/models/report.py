"""Report and file-format Pydantic models."""

from typing import List, Optional

from pydantic import BaseModel, Field, model_validator

from sepscan.models.classification import SupportClass


class StateFile(BaseModel):
    """On-disk state: explicit n and one [re, im] pair per amplitude.

    Index k of ``amplitudes`` is the basis ket |α₁…αₙ⟩ with qubit 1 as the
    most significant bit: for n = 3, index 3 is |011⟩.
    """

    n: int = Field(ge=1, description="Qubit count")
    label: Optional[str] = Field(default=None, description="Free-form state name")
    amplitudes: List[tuple[float, float]] = Field(
        description="[real, imaginary] pairs, 2**n of them"
    )

    @model_validator(mode="after")
    def validate_length(self):
        """The amplitude list has exactly 2**n entries."""
        if len(self.amplitudes) != 2**self.n:
            raise ValueError(
                f"expected {2**self.n} amplitudes for n={self.n}, got {len(self.amplitudes)}"
            )
        return self


class BlockReport(BaseModel):
    """Criterion and oracle results for one block."""

    block: List[int]
    norm_sq: float = Field(description="ξ² of the block")
    max_norm_sq: float
    residual: float
    criterion_separable: bool
    singular_values: List[float]
    oracle_separable: bool
    agree: bool
    marginal: bool


class FactorReport(BaseModel):
    """One block of the finest factorization."""

    labels: List[int]
    entangled: bool
    amplitudes: List[tuple[float, float]]


class Report(BaseModel):
    """Full classification report for one input state."""

    input_digest: str = Field(description="SHA-256 of the canonical amplitude text")
    label: Optional[str] = None
    n: int
    summary: str = Field(description="fully separable / partially separable / fully entangled")
    blocks: List[FactorReport]
    verdicts: List[BlockReport]
    polarized_norms: List[float] = Field(description="ξ² of each single qubit")
    marginal: bool = Field(description="Some block lies just above the threshold")
    disagreement: bool = Field(description="Criterion and oracle disagree on some block")
    support_class: Optional[SupportClass] = Field(
        default=None, description="Table class, three-qubit states only"
    )


class CoherentReport(BaseModel):
    """Coherent-vector diagnostics of one block."""

    block: List[int]
    m: int
    components: List[float]
    multi_indices: List[str] = Field(description="Pauli labels such as 'XZ'")
    norm_sq: float
    max_norm_sq: float
    residual: float
    separable: bool


class FuzzSummary(BaseModel):
    """Agreement statistics from a randomized criterion-versus-oracle run."""

    n: int
    trials: int
    seed: int
    blocks_checked: int
    agreements: int = Field(description="Trials where every block agreed")
    disagreements: List[str] = Field(default_factory=list)
    max_residual: float = Field(description="Largest ξ² residual seen on a separable verdict")
    max_discrepancy: float = Field(description="Largest gap between the two channels")
    max_two_qubit_deviation: Optional[float] = Field(
        default=None, description="Largest |ξ² - (1 - 4|ad-bc|²)| for n = 2"
    )
