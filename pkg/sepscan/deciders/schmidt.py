import logging
from typing import Optional

import scipy.linalg

from sepscan.configs.settings import settings
from sepscan.deciders.ports import SeparabilityDecider, check_block
from sepscan.models.state import PureState
from sepscan.models.verdict import OracleVerdict
from sepscan.quantum.statecore import (BlockLike, as_subsystem,
                                       bipartition_matrix, canonical_phase)

logger = logging.getLogger(__name__)


class SchmidtOracle(SeparabilityDecider):
    """Schmidt rank of the amplitude matrix across the cut.

    The block separates iff s₂ < cutoff·s₁. When it does, the dominant
    singular vectors are the two factor states.
    """

    def __init__(self, cutoff: Optional[float] = None):
        self.cutoff = settings.oracle_cutoff if cutoff is None else cutoff

    def decide(self, state: PureState, block: BlockLike) -> OracleVerdict:
        block = as_subsystem(block)
        check_block(state, block)
        complement = block.complement(state.labels)

        matrix = bipartition_matrix(state, block)
        u, s, vh = scipy.linalg.svd(matrix, full_matrices=False)
        separable = bool(s[1] < self.cutoff * s[0])

        block_factor = complement_factor = None
        if separable:
            block_factor = canonical_phase(
                PureState.from_unnormalized(vh[0], labels=block.labels)
            )
            complement_factor = canonical_phase(
                PureState.from_unnormalized(u[:, 0], labels=complement.labels)
            )

        logger.debug(
            "oracle %s: s1=%.12g s2=%.3g separable=%s",
            block.describe(),
            s[0],
            s[1],
            separable,
        )
        return OracleVerdict(
            subsystem=block,
            separable=separable,
            singular_values=tuple(float(v) for v in s),
            cutoff=self.cutoff,
            block_factor=block_factor,
            complement_factor=complement_factor,
        )
