import logging
from typing import Optional

import numpy as np

from sepscan.deciders.ports import check_block
from sepscan.helpers.statefile_helper import input_digest
from sepscan.models.report import (BlockReport, CoherentReport, FactorReport,
                                   FuzzSummary, Report)
from sepscan.models.state import PureState
from sepscan.quantum.minors import two_qubit_norm
from sepscan.quantum.paulispace import coherent_vector, pauli_label
from sepscan.quantum.statecore import (BlockLike, as_subsystem,
                                       random_block_product, random_pure_state,
                                       reduced_density)
from sepscan.services.classification_service import ClassificationService

logger = logging.getLogger(__name__)

FUZZ_MIN_QUBITS = 2
FUZZ_MAX_QUBITS = 8


class ReportService:
    """Service class assembling reports for the command line."""

    def __init__(self, tolerance: Optional[float] = None, cutoff: Optional[float] = None):
        """Initialize ReportService with a ClassificationService."""
        self.classification = ClassificationService(tolerance, cutoff)
        self.separability = self.classification.separability

    def build_report(self, state: PureState, label: Optional[str] = None) -> Report:
        """Factorization, per-block verdicts from both deciders, and ξ² of every part."""
        tree = self.classification.finest_factorization(state)

        verdicts = []
        for block in self.separability.all_blocks(state.labels, state.n // 2):
            check = self.separability.cross_check(state, block)
            verdicts.append(
                BlockReport(
                    block=list(block.labels),
                    norm_sq=check.criterion.norm_sq,
                    max_norm_sq=check.criterion.max_norm_sq,
                    residual=check.criterion.residual,
                    criterion_separable=check.criterion.separable,
                    singular_values=list(check.oracle.singular_values),
                    oracle_separable=check.oracle.separable,
                    agree=check.agree,
                    marginal=check.criterion.marginal,
                )
            )

        support_class = None
        if state.n == 3:
            support = np.flatnonzero(np.abs(state.amplitudes) > self.classification.tolerance)
            support_class = self.classification.classify_support_3q(
                support, coefficients=state.amplitudes
            )

        disagreement = bool(tree.disagreements) or not all(v.agree for v in verdicts)
        if disagreement:
            logger.warning("report for %s carries a criterion/oracle disagreement", label)
        return Report(
            input_digest=input_digest(state),
            label=label,
            n=state.n,
            summary=tree.summary,
            blocks=[
                FactorReport(
                    labels=list(block.labels),
                    entangled=block.entangled,
                    amplitudes=[(float(z.real), float(z.imag)) for z in block.state.amplitudes],
                )
                for block in tree.blocks
            ],
            verdicts=verdicts,
            polarized_norms=[
                self.separability.one_part_separable(state, part).norm_sq
                for part in sorted(state.labels)
            ],
            marginal=any(v.marginal for v in verdicts),
            disagreement=disagreement,
            support_class=support_class,
        )

    def coherent_report(self, state: PureState, block: BlockLike) -> CoherentReport:
        """Components and norm of the block's coherent vector."""
        block = as_subsystem(block)
        check_block(state, block)
        vector = coherent_vector(reduced_density(state, block))
        verdict = self.separability.criterion.verdict(
            block, vector.norm_sq, (vector.norm_sq / 2.0 + 2.0**-block.size)
        )
        return CoherentReport(
            block=list(block.labels),
            m=vector.m,
            components=[float(c) for c in vector.components],
            multi_indices=[pauli_label(index) for index in vector.multi_indices()],
            norm_sq=vector.norm_sq,
            max_norm_sq=vector.max_norm_sq,
            residual=verdict.residual,
            separable=verdict.separable,
        )

    def fuzz(self, n: int, trials: int, seed: int) -> FuzzSummary:
        """Criterion against oracle on random and block-product states."""
        if not FUZZ_MIN_QUBITS <= n <= FUZZ_MAX_QUBITS:
            raise ValueError(
                f"fuzz needs {FUZZ_MIN_QUBITS} <= n <= {FUZZ_MAX_QUBITS}, got n={n}"
            )
        if trials < 1:
            raise ValueError(f"trials must be at least 1, got {trials}")
        logger.info("fuzzing n=%d with %d trials (seed %d)", n, trials, seed)

        rng = np.random.default_rng(seed)
        blocks = self.separability.all_blocks(range(1, n + 1), n // 2)
        agreements = 0
        checked = 0
        disagreements: list[str] = []
        max_residual = 0.0
        max_discrepancy = 0.0
        max_deviation: Optional[float] = 0.0 if n == 2 else None

        for trial in range(trials):
            if trial % 2 == 0:
                state = random_pure_state(n, int(rng.integers(2**32)))
            else:
                state, _ = random_block_product(n, int(rng.integers(2**32)))

            all_agree = True
            for block in blocks:
                check = self.separability.cross_check(state, block)
                checked += 1
                max_discrepancy = max(max_discrepancy, check.discrepancy)
                if check.criterion.separable:
                    max_residual = max(max_residual, abs(check.criterion.residual))
                if not check.agree:
                    all_agree = False
                    disagreements.append(f"trial {trial} block {block.describe()}")
            agreements += all_agree

            if max_deviation is not None:
                norm_sq = self.separability.one_part_separable(state, 2).norm_sq
                max_deviation = max(max_deviation, abs(norm_sq - two_qubit_norm(state)))

        return FuzzSummary(
            n=n,
            trials=trials,
            seed=seed,
            blocks_checked=checked,
            agreements=agreements,
            disagreements=disagreements,
            max_residual=max_residual,
            max_discrepancy=max_discrepancy,
            max_two_qubit_deviation=max_deviation,
        )
