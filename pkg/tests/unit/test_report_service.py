"""Unit tests for ReportService."""

import numpy as np
import pytest

from sepscan.models.classification import SeparabilityClass
from sepscan.models.report import Report
from sepscan.models.state import PureState


class TestBuildReport:
    """Test suite for build_report."""

    def test_zero_bell(self, report_service, zero_bell):
        """Test the report of |0⟩ ⊗ Bell."""
        # WHAT: Build a full report
        # WHY: Blocks, per-cut verdicts and the table class in one place
        report = report_service.build_report(zero_bell, label="zero-bell")

        assert report.summary == "partially separable"
        assert [block.labels for block in report.blocks] == [[1], [2, 3]]
        assert [block.entangled for block in report.blocks] == [False, True]
        assert [verdict.block for verdict in report.verdicts] == [[1], [2], [3]]
        assert report.polarized_norms == pytest.approx([1.0, 0.0, 0.0])
        assert report.support_class.class_label == SeparabilityClass.A_PART
        assert not report.disagreement
        assert report.label == "zero-bell"

    def test_four_qubits_has_no_table_class(self, report_service, bell_bell):
        """Test that only three-qubit reports carry a table class."""
        # WHAT: Report on Bell ⊗ Bell
        # WHY: The table is three-qubit only
        report = report_service.build_report(bell_bell)

        assert report.support_class is None
        assert len(report.verdicts) == 4 + 6

    def test_digest_is_stable(self, report_service, ghz3):
        """Test that the same state gives the same digest."""
        # WHAT: Two reports of GHZ3
        # WHY: Reports are reproducible
        first = report_service.build_report(ghz3)
        second = report_service.build_report(ghz3)

        assert first.input_digest == second.input_digest
        assert len(first.input_digest) == 64
        assert first.model_dump_json() == second.model_dump_json()

    @pytest.mark.parametrize("fixture", ["zero_bell", "bell_bell"])
    def test_json_round_trip(self, report_service, fixture, request):
        """Test that the JSON report parses back to the same report."""
        # WHAT: Dump to JSON and validate it again
        # WHY: The machine-readable output is the report, nothing lost
        report = report_service.build_report(request.getfixturevalue(fixture), label=fixture)

        assert Report.model_validate_json(report.model_dump_json()) == report

    def test_disagreement_is_reported(self, report_service):
        """Test a state between the two thresholds."""
        # WHAT: Amplitudes (1, 0, 0, 1e-6)
        # WHY: ξ² misses its maximum by ~4e-12 while s2/s1 = 1e-6, so the channels split
        state = PureState.from_unnormalized(np.array([1.0, 0.0, 0.0, 1e-6]))
        report = report_service.build_report(state)

        assert report.disagreement
        assert [verdict.agree for verdict in report.verdicts] == [False, False]
        assert all(verdict.criterion_separable for verdict in report.verdicts)
        assert not any(verdict.oracle_separable for verdict in report.verdicts)

class TestCoherentReport:
    """Test suite for coherent_report."""

    def test_ghz4_pair(self, report_service, ghz4):
        """Test the coherent vector of GHZ4 on {A3, A4}."""
        # WHAT: Only ZZ survives, with weight 1/√2
        # WHY: ξ² = 1/2 against a maximum of 3/2
        report = report_service.coherent_report(ghz4, [3, 4])

        assert report.m == 2
        assert len(report.components) == 15
        assert report.multi_indices[0] == "IX"
        assert report.norm_sq == pytest.approx(0.5)
        assert report.max_norm_sq == pytest.approx(1.5)
        assert report.residual == pytest.approx(1.0)
        assert not report.separable

    def test_rejects_whole_system(self, report_service, ghz3):
        """Test a block that leaves nothing outside."""
        # WHAT: Block {A1,A2,A3} of a three-qubit state
        # WHY: A cut needs qubits on both sides
        with pytest.raises(ValueError, match="whole"):
            report_service.coherent_report(ghz3, [1, 2, 3])


class TestFuzz:
    """Test suite for fuzz."""

    def test_two_qubits(self, report_service):
        """Test that both channels agree on two-qubit states."""
        # WHAT: 20 trials on n = 2
        # WHY: The closed form 1 - 4|ad - bc|² must match too
        summary = report_service.fuzz(2, trials=20, seed=0)

        assert summary.agreements == 20
        assert summary.blocks_checked == 20
        assert summary.disagreements == []
        assert summary.max_two_qubit_deviation < 1e-12

    def test_five_qubits(self, report_service):
        """Test random and block-product states on n = 5."""
        # WHAT: 10 trials, blocks up to size 2
        # WHY: Block products exercise the separable side
        summary = report_service.fuzz(5, trials=10, seed=3)

        assert summary.agreements == 10
        assert summary.blocks_checked == 10 * 15
        assert summary.max_two_qubit_deviation is None
        assert summary.max_residual < 1e-9

    @pytest.mark.parametrize("n, trials", [(1, 5), (9, 5), (3, 0)])
    def test_rejects_bad_arguments(self, report_service, n, trials):
        """Test the argument ranges."""
        # WHAT: n outside 2..8 or no trials
        # WHY: Input errors are reported, not run
        with pytest.raises(ValueError):
            report_service.fuzz(n, trials=trials, seed=0)
