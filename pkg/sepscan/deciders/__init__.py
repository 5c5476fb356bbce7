"""Separability deciders: the coherent-vector criterion and the Schmidt oracle."""

from sepscan.deciders.criterion import CoherentCriterion
from sepscan.deciders.ports import SeparabilityDecider
from sepscan.deciders.schmidt import SchmidtOracle

__all__ = ["CoherentCriterion", "SchmidtOracle", "SeparabilityDecider"]
