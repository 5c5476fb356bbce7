import logging
from typing import Optional

import numpy as np

from sepscan.configs.settings import settings
from sepscan.deciders.ports import SeparabilityDecider, check_block
from sepscan.models.state import PureState, Subsystem
from sepscan.models.verdict import CriterionVerdict
from sepscan.quantum.paulispace import pauli_coefficients
from sepscan.quantum.statecore import BlockLike, as_subsystem, bipartition_matrix, cut_purity

logger = logging.getLogger(__name__)


class CoherentCriterion(SeparabilityDecider):
    """A block separates iff its coherent vector reaches 2(1 − 2^−m).

    ξ² is taken from the purity of the reduced state, ξ² = 2(Tr ρ² − 2^−m).
    For small blocks it is also summed from the Pauli components and the two
    values must agree.
    """

    def __init__(self, tolerance: Optional[float] = None, verify_components: bool = True):
        self.tolerance = settings.tolerance if tolerance is None else tolerance
        self.verify_components = verify_components

    def verdict(self, block: Subsystem, norm_sq: float, purity: float) -> CriterionVerdict:
        """Threshold an already computed ξ²."""
        max_norm_sq = 2.0 * (1.0 - 2.0**-block.size)
        residual = max_norm_sq - norm_sq
        separable = residual < self.tolerance
        marginal = not separable and residual <= settings.marginal_ceiling
        if marginal:
            logger.debug(
                "block %s is marginal: residual %.3g", block.describe(), residual
            )
        return CriterionVerdict(
            subsystem=block,
            separable=separable,
            norm_sq=norm_sq,
            max_norm_sq=max_norm_sq,
            residual=residual,
            purity=purity,
            tolerance=self.tolerance,
            marginal=marginal,
        )

    def _component_norm_sq(self, state: PureState, block: Subsystem) -> float:
        matrix = bipartition_matrix(state, block).T
        rho = matrix @ matrix.conj().T
        coeffs = pauli_coefficients(rho, block.size).real.reshape(-1)[1:]
        return float(coeffs @ coeffs) * 2.0 ** -(block.size - 1)

    def decide(self, state: PureState, block: BlockLike) -> CriterionVerdict:
        block = as_subsystem(block)
        check_block(state, block)
        purity = cut_purity(state, block)
        norm_sq = 2.0 * (purity - 2.0**-block.size)

        if self.verify_components and block.size <= settings.component_check_max_qubits:
            summed = self._component_norm_sq(state, block)
            if not np.isclose(summed, norm_sq, rtol=0.0, atol=settings.tolerance):
                raise ArithmeticError(
                    f"ξ² of {block.describe()} disagrees between purity ({norm_sq!r}) "
                    f"and components ({summed!r})"
                )

        verdict = self.verdict(block, norm_sq, purity)
        logger.debug(
            "criterion %s: xi^2=%.12g residual=%.3g separable=%s",
            block.describe(),
            norm_sq,
            verdict.residual,
            verdict.separable,
        )
        return verdict
