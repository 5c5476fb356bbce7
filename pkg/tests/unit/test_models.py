"""Unit tests for Pydantic models and validation."""

import numpy as np
import pytest
from pydantic import ValidationError

from sepscan.models.classification import FactorBlock, FactorizationTree
from sepscan.models.pauli import CoherentVector, PauliTensor
from sepscan.models.rearrange import RearrangePlan
from sepscan.models.report import StateFile
from sepscan.models.state import DensityMatrix, PureState, Subsystem
from sepscan.models.verdict import CriterionVerdict, OracleVerdict


class TestPureState:
    """Test suite for PureState."""

    def test_infers_qubit_count_from_length(self):
        """Test that n is inferred from the amplitude count."""
        # WHAT: Build a state from 8 amplitudes
        # WHY: Files and constructors may omit n
        state = PureState(amplitudes=np.eye(8)[5])

        assert state.n == 3
        assert state.labels == (1, 2, 3)

    def test_rejects_wrong_length(self):
        """Test that a length that is not 2**n is rejected."""
        # WHAT: Seven amplitudes for a three-qubit state
        # WHY: Index convention only makes sense for full registers
        with pytest.raises(ValidationError, match="amplitudes"):
            PureState(n=3, amplitudes=np.ones(7) / np.sqrt(7))

    def test_rejects_zero_vector(self):
        """Test that the all-zero vector is rejected."""
        # WHAT: Construct from zeros
        # WHY: Degenerate input is not a state
        with pytest.raises(ValidationError, match="all-zero"):
            PureState(amplitudes=np.zeros(4))

    def test_renormalizes_within_tolerance(self):
        """Test that a near-unit vector is renormalized."""
        # WHAT: Norm off by 1e-8
        # WHY: Round-tripped files carry tiny norm errors
        state = PureState(amplitudes=[1.0 + 1e-8, 0.0])

        assert np.linalg.norm(state.amplitudes) == pytest.approx(1.0, abs=1e-15)

    def test_rejects_unnormalized_beyond_tolerance(self):
        """Test that a clearly unnormalized vector is rejected."""
        # WHAT: Norm 2
        # WHY: Silent renormalization would hide malformed input
        with pytest.raises(ValidationError, match="norm"):
            PureState(amplitudes=[2.0, 0.0])

    def test_amplitudes_are_read_only(self):
        """Test that the amplitude array cannot be mutated."""
        # WHAT: Inspect the array flags
        # WHY: States are shared between services without copying
        state = PureState(amplitudes=[1.0, 0.0])

        assert state.amplitudes.flags.writeable is False

    def test_rejects_duplicate_labels(self):
        """Test that slot labels must be distinct."""
        # WHAT: Two slots labelled A1
        # WHY: Labels identify qubits
        with pytest.raises(ValidationError, match="distinct"):
            PureState(amplitudes=np.eye(4)[0], labels=(1, 1))

    def test_from_unnormalized(self):
        """Test that from_unnormalized scales any nonzero vector."""
        # WHAT: Normalize (3, 4)
        # WHY: Coefficient sampling produces unnormalized vectors
        state = PureState.from_unnormalized([3.0, 4.0])

        assert np.allclose(state.amplitudes, [0.6, 0.8])


class TestSubsystem:
    """Test suite for Subsystem."""

    def test_sorts_labels(self):
        """Test that labels are stored in ascending order."""
        # WHAT: Build {A3, A1}
        # WHY: Reports and reductions rely on ascending order
        assert Subsystem.of(3, 1).labels == (1, 3)

    def test_parse_block_spec(self):
        """Test that comma-separated specs are parsed."""
        # WHAT: Parse "1, 3"
        # WHY: CLI block syntax
        assert Subsystem.parse("1, 3").labels == (1, 3)

    def test_parse_rejects_garbage(self):
        """Test that non-integer specs are rejected."""
        # WHAT: Parse "a,b"
        # WHY: Bad block specs must fail as input errors
        with pytest.raises(ValueError, match="integer"):
            Subsystem.parse("a,b")

    def test_rejects_label_zero(self):
        """Test that labels start at 1."""
        # WHAT: Label 0
        # WHY: Labels follow the A1..An numbering
        with pytest.raises(ValidationError):
            Subsystem.of(0)

    def test_rejects_duplicates(self):
        """Test that labels must be distinct."""
        # WHAT: {A2, A2}
        # WHY: A block is a set of qubits
        with pytest.raises(ValidationError, match="distinct"):
            Subsystem.of(2, 2)

    def test_complement(self):
        """Test complement against a label set."""
        # WHAT: Complement of {A2} in 1..4
        # WHY: Oracle factors live on the complement
        assert Subsystem.of(2).complement([1, 2, 3, 4]).labels == (1, 3, 4)

    def test_describe(self):
        """Test the printed form."""
        # WHAT: Describe {A1, A3}
        # WHY: Report text uses this form
        assert Subsystem.of(1, 3).describe() == "{A1,A3}"


class TestDensityMatrix:
    """Test suite for DensityMatrix."""

    def test_rejects_non_hermitian(self):
        """Test that a non-Hermitian matrix is rejected."""
        # WHAT: Off-diagonal entries that are not conjugate
        # WHY: Density matrices are Hermitian
        with pytest.raises(ValidationError, match="Hermitian"):
            DensityMatrix(entries=[[0.5, 0.1], [0.2, 0.5]])

    def test_rejects_bad_trace(self):
        """Test that the trace must be 1."""
        # WHAT: Identity matrix
        # WHY: States have unit trace
        with pytest.raises(ValidationError, match="trace"):
            DensityMatrix(entries=np.eye(2))

    def test_rejects_negative_eigenvalue(self):
        """Test that the matrix must be positive semidefinite."""
        # WHAT: diag(1.5, -0.5)
        # WHY: Unit trace alone does not make a state
        with pytest.raises(ValidationError, match="negative"):
            DensityMatrix(entries=np.diag([1.5, -0.5]))


class TestPauliModels:
    """Test suite for PauliTensor and CoherentVector."""

    def test_pauli_tensor_requires_unit_identity_coefficient(self):
        """Test that a_0 must equal 1."""
        # WHAT: All-zero coefficients
        # WHY: Unit trace fixes a_0
        with pytest.raises(ValidationError, match="a_0"):
            PauliTensor(n=1, coeffs=np.zeros(4))

    def test_coherent_vector_length(self):
        """Test that the component count is 4**m - 1."""
        # WHAT: Four components for m = 1
        # WHY: Component layout is fixed
        with pytest.raises(ValidationError, match="components"):
            CoherentVector(m=1, components=[0.0, 0.0, 0.0, 0.0])

    def test_coherent_vector_norm_bound(self):
        """Test that the norm cannot exceed 2(1 - 2**-m)."""
        # WHAT: Bloch vector of length 2
        # WHY: No state has a longer coherent vector
        with pytest.raises(ValidationError, match="maximum"):
            CoherentVector(m=1, components=[0.0, 0.0, 2.0])

    def test_multi_indices_skip_identity(self):
        """Test lexicographic multi-indices without 0...0."""
        # WHAT: Indices for m = 2
        # WHY: Serialization order must be deterministic
        vector = CoherentVector(m=2, components=np.zeros(15))
        indices = vector.multi_indices()

        assert indices[0] == (0, 1)
        assert indices[-1] == (3, 3)
        assert len(indices) == 15


class TestRearrangePlan:
    """Test suite for RearrangePlan."""

    def test_rejects_non_adjacent_move(self):
        """Test that moves must swap neighbours."""
        # WHAT: Move (1, 3)
        # WHY: Plans are products of adjacent exchanges
        with pytest.raises(ValidationError, match="invalid exchange"):
            RearrangePlan(n=3, moves=((1, 3),), net_permutation=(3, 2, 1))

    def test_rejects_wrong_permutation(self):
        """Test that the permutation must match the moves."""
        # WHAT: Claim identity for a single swap
        # WHY: net_permutation is derived data
        with pytest.raises(ValidationError, match="realize"):
            RearrangePlan(n=2, moves=((1, 2),), net_permutation=(1, 2))

    def test_inverse_undoes_plan(self):
        """Test that a plan followed by its inverse is the identity."""
        # WHAT: Compose with the inverse
        # WHY: Round trips restore slot order
        plan = RearrangePlan.from_moves(4, [(1, 2), (2, 3), (3, 4)])

        assert plan.then(plan.inverse()).is_identity


class TestVerdicts:
    """Test suite for verdict models."""

    def test_criterion_flag_must_match_residual(self):
        """Test that separable agrees with residual < tolerance."""
        # WHAT: Claim separable with residual 0.5
        # WHY: The flag is a function of the residual
        with pytest.raises(ValidationError, match="residual"):
            CriterionVerdict(
                subsystem=Subsystem.of(1),
                separable=True,
                norm_sq=0.5,
                max_norm_sq=1.0,
                residual=0.5,
                purity=0.75,
                tolerance=1e-9,
            )

    def test_criterion_allows_rounding_below_zero(self):
        """Test a residual a few ulps below zero at zero tolerance."""
        # WHAT: Residual -4.4e-16 with tolerance 0
        # WHY: ξ² of an exactly pure block can overshoot its maximum by rounding
        verdict = CriterionVerdict(
            subsystem=Subsystem.of(1),
            separable=True,
            norm_sq=1.0 + 4.4e-16,
            max_norm_sq=1.0,
            residual=-4.4e-16,
            purity=1.0,
            tolerance=0.0,
        )

        assert verdict.separable

    def test_criterion_rejects_negative_residual(self):
        """Test that a clearly negative residual is refused."""
        # WHAT: Residual -1e-6 with tolerance 1e-9
        # WHY: ξ² never exceeds 2(1 - 2^-m) beyond rounding
        with pytest.raises(ValidationError, match="negative residual"):
            CriterionVerdict(
                subsystem=Subsystem.of(1),
                separable=True,
                norm_sq=1.000001,
                max_norm_sq=1.0,
                residual=-1e-6,
                purity=1.0,
                tolerance=1e-9,
            )

    def test_oracle_values_must_descend(self):
        """Test that singular values are descending."""
        # WHAT: Ascending spectrum
        # WHY: s1 is the dominant Schmidt coefficient
        with pytest.raises(ValidationError, match="descending"):
            OracleVerdict(
                subsystem=Subsystem.of(1),
                separable=False,
                singular_values=(0.6, 0.8),
                cutoff=1e-9,
            )

    def test_oracle_schmidt_rank(self):
        """Test the Schmidt rank of a Bell spectrum."""
        # WHAT: Two equal singular values
        # WHY: Rank 2 means entangled
        s = 1 / np.sqrt(2)
        verdict = OracleVerdict(
            subsystem=Subsystem.of(1), separable=False, singular_values=(s, s), cutoff=1e-9
        )

        assert verdict.schmidt_rank == 2


class TestFileAndTreeModels:
    """Test suite for StateFile and FactorizationTree."""

    def test_state_file_length(self):
        """Test that StateFile checks the amplitude count."""
        # WHAT: Seven pairs for n = 3
        # WHY: Length errors are input errors
        with pytest.raises(ValidationError, match="expected 8"):
            StateFile(n=3, amplitudes=[(0.0, 0.0)] * 7)

    def test_tree_blocks_must_partition(self):
        """Test that blocks must cover every label exactly once."""
        # WHAT: Tree on 1..2 with one block {A1}
        # WHY: A factorization accounts for every qubit
        block = FactorBlock(labels=(1,), entangled=False, state=PureState(amplitudes=[1.0, 0.0]))

        with pytest.raises(ValidationError, match="partition"):
            FactorizationTree(labels=(1, 2), blocks=[block])
