import logging
from itertools import combinations
from typing import Iterable, Optional

import numpy as np
from scipy.stats import unitary_group

from sepscan.deciders.criterion import CoherentCriterion
from sepscan.deciders.schmidt import SchmidtOracle
from sepscan.models.state import PureState, Subsystem
from sepscan.models.verdict import (BlockCheck, CriterionVerdict,
                                    FullSeparability, OracleVerdict,
                                    TwoPartVerdict)
from sepscan.quantum.paulispace import polarized_vector
from sepscan.quantum.statecore import BlockLike, apply_local_unitaries, as_subsystem

logger = logging.getLogger(__name__)

# Above this size the invariance check only visits blocks up to n // 2
ALL_BLOCKS_MAX_QUBITS = 6


class SeparabilityService:
    """Service class for partial separability decisions."""

    def __init__(
        self,
        tolerance: Optional[float] = None,
        cutoff: Optional[float] = None,
        verify_components: bool = True,
    ):
        """Initialize SeparabilityService with both deciders."""
        self.criterion = CoherentCriterion(tolerance, verify_components=verify_components)
        self.oracle = SchmidtOracle(cutoff)

    @property
    def tolerance(self) -> float:
        return self.criterion.tolerance

    def one_part_separable(self, state: PureState, part: int) -> CriterionVerdict:
        """ξ²_{A_i} = 1 from the polarized vector of A_i."""
        norm_sq = polarized_vector(state, part).norm_sq
        return self.criterion.verdict(Subsystem.of(part), norm_sq, (1.0 + norm_sq) / 2.0)

    def fully_separable(self, state: PureState) -> FullSeparability:
        """Every part reaches ξ² = 1."""
        verdicts = [self.one_part_separable(state, label) for label in state.labels]
        return FullSeparability(
            separable=all(v.separable for v in verdicts), verdicts=verdicts
        )

    def block_separable(self, state: PureState, block: BlockLike) -> CriterionVerdict:
        """ξ²_block against 2(1 − 2^−m)."""
        return self.criterion.decide(state, block)

    def two_part_separable(self, state: PureState, i: int, j: int) -> TwoPartVerdict:
        """Pair {A_i, A_j} separates from the rest and is itself entangled."""
        if i == j:
            raise ValueError(f"two-part check needs distinct labels, got A{i} twice")
        pair = self.block_separable(state, Subsystem.of(i, j))
        parts = [self.one_part_separable(state, label) for label in sorted((i, j))]
        return TwoPartVerdict(
            pair=pair,
            parts=parts,
            two_part_class=pair.separable and not any(p.separable for p in parts),
        )

    def schmidt_oracle(self, state: PureState, block: BlockLike) -> OracleVerdict:
        return self.oracle.decide(state, block)

    def cross_check(self, state: PureState, block: BlockLike) -> BlockCheck:
        """Run both deciders on one block and compare them."""
        block = as_subsystem(block)
        criterion = self.block_separable(state, block)
        oracle = self.schmidt_oracle(state, block)

        s = np.asarray(oracle.singular_values)
        schmidt_norm_sq = 2.0 * (float(np.sum(s**4)) - 2.0**-block.size)
        agree = criterion.separable == oracle.separable
        if not agree:
            logger.warning(
                "criterion and oracle disagree on %s: residual=%.3g s2/s1=%.3g",
                block.describe(),
                criterion.residual,
                s[1] / s[0],
            )
        return BlockCheck(
            criterion=criterion,
            oracle=oracle,
            agree=agree,
            discrepancy=abs(criterion.norm_sq - schmidt_norm_sq),
        )

    @staticmethod
    def all_blocks(labels: Iterable[int], max_size: Optional[int] = None) -> list[Subsystem]:
        """Proper nonempty blocks by ascending size, then lexicographically."""
        labels = sorted(labels)
        largest = len(labels) - 1 if max_size is None else min(max_size, len(labels) - 1)
        return [
            Subsystem(labels=combo)
            for size in range(1, largest + 1)
            for combo in combinations(labels, size)
        ]

    def local_unitary_invariance_check(self, state: PureState, seed: int) -> bool:
        """Random local unitaries leave every block's separable flag unchanged."""
        rng = np.random.default_rng(seed)
        unitaries = [unitary_group.rvs(2, random_state=rng) for _ in range(state.n)]
        rotated = apply_local_unitaries(state, unitaries)

        max_size = None if state.n <= ALL_BLOCKS_MAX_QUBITS else state.n // 2
        invariant = True
        for block in self.all_blocks(state.labels, max_size):
            before = self.block_separable(state, block).separable
            after = self.block_separable(rotated, block).separable
            if before != after:
                logger.warning(
                    "local unitaries flipped %s from %s to %s (seed %d)",
                    block.describe(),
                    before,
                    after,
                    seed,
                )
                invariant = False
        return invariant
