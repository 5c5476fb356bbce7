"""Pydantic models for sepscan."""

from sepscan.models.classification import (FactorBlock, FactorizationTree,
                                           MinorCondition, PairwiseConditionReport,
                                           PartConditions, SeparabilityClass,
                                           SupportClass, Table3, TableBranch)
from sepscan.models.pauli import CoherentVector, PauliTensor
from sepscan.models.rearrange import RearrangePlan
from sepscan.models.report import (BlockReport, CoherentReport, FactorReport,
                                   FuzzSummary, Report, StateFile)
from sepscan.models.state import DensityMatrix, PureState, Subsystem
from sepscan.models.verdict import (BlockCheck, CriterionVerdict,
                                    FullSeparability, OracleVerdict,
                                    TwoPartVerdict, Verdict)

__all__ = [
    "BlockCheck",
    "BlockReport",
    "CoherentReport",
    "CoherentVector",
    "CriterionVerdict",
    "DensityMatrix",
    "FactorBlock",
    "FactorReport",
    "FactorizationTree",
    "FullSeparability",
    "FuzzSummary",
    "MinorCondition",
    "OracleVerdict",
    "PairwiseConditionReport",
    "PartConditions",
    "PauliTensor",
    "PureState",
    "RearrangePlan",
    "Report",
    "SeparabilityClass",
    "StateFile",
    "Subsystem",
    "SupportClass",
    "Table3",
    "TableBranch",
    "TwoPartVerdict",
    "Verdict",
]
