"""Classification Pydantic models."""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from sepscan.models.state import PureState, format_labels
from sepscan.models.verdict import CriterionVerdict


class SeparabilityClass(str, Enum):
    """Class labels of the three-qubit support table."""

    FULLY_SEPARABLE = "fully-separable"
    A_PART = "A-part"
    B_PART = "B-part"
    C_PART = "C-part"
    FULLY_ENTANGLED = "fully-entangled"
    CONDITIONAL = "conditional"


PART_CLASSES = {
    1: SeparabilityClass.A_PART,
    2: SeparabilityClass.B_PART,
    3: SeparabilityClass.C_PART,
}


class FactorBlock(BaseModel):
    """One block of a factorization with its factor state."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    labels: tuple[int, ...] = Field(description="Ascending qubit labels")
    entangled: bool = Field(description="Block has >= 2 qubits and no separable sub-block")
    state: PureState = Field(description="Factor state, first nonzero amplitude real-positive")

    def describe(self) -> str:
        return format_labels(self.labels)


class FactorizationTree(BaseModel):
    """Finest partition of the qubits into internally entangled blocks."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    labels: tuple[int, ...] = Field(description="Labels of the factorized state")
    blocks: List[FactorBlock] = Field(description="Blocks ordered by smallest label")
    diagnostics: List[CriterionVerdict] = Field(
        default_factory=list, description="Every criterion verdict computed on the way"
    )
    disagreements: List[str] = Field(
        default_factory=list, description="Blocks where criterion and oracle disagreed"
    )

    @model_validator(mode="after")
    def validate_partition(self):
        """Blocks are disjoint and cover every label."""
        seen = [label for block in self.blocks for label in block.labels]
        if sorted(seen) != sorted(self.labels):
            raise ValueError(f"blocks {self.block_labels} do not partition {self.labels}")
        return self

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def block_labels(self) -> list[tuple[int, ...]]:
        return [block.labels for block in self.blocks]

    def reconstruct(self) -> PureState:
        """Tensor product of the block factors, in ascending label order."""
        from sepscan.quantum.statecore import tensor_product

        return tensor_product(*(block.state for block in self.blocks))

    @property
    def summary(self) -> str:
        if all(len(block.labels) == 1 for block in self.blocks):
            return "fully separable"
        if len(self.blocks) == 1:
            return "fully entangled"
        return "partially separable"


class TableBranch(BaseModel):
    """A class reached when the listed coefficient equalities hold."""

    conditions: List[str] = Field(description="Equalities such as 'ad=bc'")
    class_label: SeparabilityClass


class SupportClass(BaseModel):
    """Class of three-qubit states sharing one pattern of nonzero coefficients."""

    support: tuple[int, ...] = Field(description="Basis indices with nonzero amplitude")
    letters: str = Field(description="Support as coefficient letters, e.g. 'a,d'")
    class_label: SeparabilityClass = Field(
        description="Resolved class, or 'conditional' when branches remain open"
    )
    generic_label: SeparabilityClass = Field(
        description="Class for coefficients satisfying none of the branch conditions"
    )
    branches: List[TableBranch] = Field(default_factory=list)
    satisfied: List[str] = Field(
        default_factory=list,
        description="Branch conditions found to hold for supplied coefficients",
    )

    @property
    def number(self) -> int:
        return len(self.support)


class Table3(BaseModel):
    """All 255 three-qubit support classes."""

    rows: List[SupportClass]
    draws: int = Field(description="Coefficient draws per support and per branch")
    seed: int
    sampling_failures: List[str] = Field(default_factory=list)


class MinorCondition(BaseModel):
    """One coefficient equality pq = rs and how far it is from holding."""

    name: str = Field(description="Equality such as 'af=be'")
    value: float = Field(description="|pq - rs| on the normalized state")
    holds: bool


class PartConditions(BaseModel):
    """The six equalities for one part next to that part's polarized norm."""

    part: int
    conditions: List[MinorCondition]
    all_hold: bool
    norm_sq: float = Field(description="ξ² of the part")
    criterion_separable: bool
    consistent: bool = Field(description="all_hold <=> criterion_separable")


class PairwiseConditionReport(BaseModel):
    """Per-part equality conditions of a three-qubit state."""

    parts: List[PartConditions]

    @property
    def consistent(self) -> bool:
        return all(part.consistent for part in self.parts)

    def part(self, index: int) -> Optional[PartConditions]:
        return next((p for p in self.parts if p.part == index), None)
