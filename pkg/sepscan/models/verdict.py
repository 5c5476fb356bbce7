"""Separability verdict Pydantic models."""

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from sepscan.models.state import PureState, Subsystem

# Floating-point slack on ξ² of an exactly pure block.
ROUNDING_SLACK = 1e-12


class Verdict(BaseModel):
    """Common shape of every separability decision."""

    model_config = ConfigDict(frozen=True)

    subsystem: Subsystem = Field(description="Block the decision is about")
    separable: bool = Field(description="Whether the block factors off the rest")


class CriterionVerdict(Verdict):
    """Coherent-vector criterion: the block separates iff ξ² reaches 2(1 − 2^−m)."""

    norm_sq: float = Field(description="Squared norm of the block's coherent vector")
    max_norm_sq: float = Field(description="Maximum 2(1 - 2**-m) for m qubits")
    residual: float = Field(description="max_norm_sq - norm_sq")
    purity: float = Field(description="Tr of the squared reduced density matrix")
    tolerance: float = Field(description="Absolute threshold applied to the residual")
    marginal: bool = Field(
        default=False, description="Residual lies just above the threshold"
    )

    @model_validator(mode="after")
    def validate_residual(self):
        """separable <=> residual < tolerance, and the residual is never negative beyond rounding."""
        if self.residual < -max(self.tolerance, ROUNDING_SLACK):
            raise ValueError(f"negative residual {self.residual} for {self.subsystem.describe()}")
        if self.separable != (self.residual < self.tolerance):
            raise ValueError("separable flag disagrees with the residual")
        return self


class OracleVerdict(Verdict):
    """Schmidt-rank decision from the singular values of the reshaped amplitudes."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    singular_values: tuple[float, ...] = Field(description="Descending singular values")
    cutoff: float = Field(description="Threshold on s2 / s1")
    block_factor: Optional[PureState] = Field(
        default=None, description="Factor state on the block when separable"
    )
    complement_factor: Optional[PureState] = Field(
        default=None, description="Factor state on the complement when separable"
    )

    @model_validator(mode="after")
    def validate_spectrum(self):
        """Singular values are descending, nonnegative and square-sum to 1."""
        values = self.singular_values
        if any(v < 0 for v in values) or list(values) != sorted(values, reverse=True):
            raise ValueError("singular values must be nonnegative and descending")
        if abs(sum(v * v for v in values) - 1.0) > 1e-9:
            raise ValueError("squared singular values must sum to 1")
        if self.separable != (values[1] < self.cutoff * values[0]):
            raise ValueError("separable flag disagrees with the Schmidt spectrum")
        return self

    @property
    def schmidt_rank(self) -> int:
        return sum(1 for v in self.singular_values if v >= self.cutoff * self.singular_values[0])


class FullSeparability(BaseModel):
    """Every single-qubit part checked against ξ² = 1."""

    separable: bool = Field(description="True iff every part is one-part separable")
    verdicts: List[CriterionVerdict] = Field(description="One verdict per qubit")


class BlockCheck(BaseModel):
    """Criterion and oracle side by side for one block."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    criterion: CriterionVerdict
    oracle: OracleVerdict
    agree: bool = Field(description="Both channels reach the same verdict")
    discrepancy: float = Field(
        description="|ξ² - 2(Σs⁴ - 2^-m)| between the two channels"
    )


class TwoPartVerdict(BaseModel):
    """Pair block {A_i, A_j} together with both of its single parts."""

    pair: CriterionVerdict
    parts: List[CriterionVerdict] = Field(description="Verdicts for A_i and A_j")
    two_part_class: bool = Field(
        description="Pair separates while neither part separates on its own"
    )
