"""Unit tests for the closed-form minor expansions."""

import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from sepscan.quantum.minors import (PAIR_A3A4_MINORS_4Q, coefficient_vectors_4q,
                                    condition_name, evaluate_condition,
                                    matrix_minors, minor_norm_sq, minor_value,
                                    pair_norm_sq_4q, part_conditions_3q,
                                    polarized_norms_3q, proportional_state_4q,
                                    support_minor_names, two_qubit_norm)
from sepscan.quantum.paulispace import coherent_norm_sq, polarized_vector
from sepscan.quantum.statecore import (basis_state, bell_state, ghz_state,
                                       random_pure_state, reduced_density)

SEEDS = st.integers(min_value=0, max_value=2**32 - 1)


class TestConditions:
    """Test suite for coefficient equalities."""

    def test_condition_name_is_canonical(self):
        """Test that spelling does not depend on argument order."""
        # WHAT: be = af written backwards
        # WHY: Table conditions are compared as strings
        assert condition_name("b", "e", "a", "f") == "af=be"
        assert condition_name("f", "a", "e", "b") == "af=be"

    def test_minor_value(self, ghz3):
        """Test ah - de on GHZ3."""
        # WHAT: a = h = 1/√2, d = e = 0
        # WHY: ah - de = 1/2
        assert minor_value(ghz3.amplitudes, "ah=de") == pytest.approx(0.5)
        assert minor_value(ghz3.amplitudes, "ahde") == pytest.approx(0.5)

    def test_malformed_condition(self, ghz3):
        """Test that unknown letters are rejected."""
        # WHAT: 'ax=bc'
        # WHY: Only a…h name coefficients
        with pytest.raises(ValueError, match="malformed"):
            minor_value(ghz3.amplitudes, "ax=bc")

    def test_evaluate_condition(self, w3):
        """Test which equalities hold on W3."""
        # WHAT: W3 has b = c = e = 1/√3, all others 0
        # WHY: bc = ad fails, ah = de holds
        assert not evaluate_condition(w3.amplitudes, "ad=bc")
        assert evaluate_condition(w3.amplitudes, "ah=de")

    def test_part_conditions(self):
        """Test the six equalities of A1."""
        # WHAT: Canonical names for part 1
        # WHY: Reports list them
        names = part_conditions_3q(1)

        assert len(names) == 6
        assert "af=be" in names
        assert "ch=dg" in names

    def test_support_minor_names(self):
        """Test the one minor of a 2x2 grid."""
        # WHAT: Grid a b / c d
        # WHY: The minor is ad = bc
        grid = {(0, 0): "a", (0, 1): "b", (1, 0): "c", (1, 1): "d"}

        assert support_minor_names([0, 1], [0, 1], grid) == ["ad=bc"]


class TestMatrixMinors:
    """Test suite for matrix_minors and minor_norm_sq."""

    def test_identity(self):
        """Test the single minor of the 2x2 identity."""
        # WHAT: Minors of I
        # WHY: det I = 1
        assert np.allclose(matrix_minors(np.eye(2)), [1.0])

    def test_rank_one_vanishes(self):
        """Test that an outer product has no nonzero minor."""
        # WHAT: Minors of u v^T
        # WHY: Rank one means every 2x2 minor is zero
        rng = np.random.default_rng(0)
        matrix = np.outer(rng.standard_normal(4), rng.standard_normal(8))

        assert matrix_minors(matrix).shape == (6 * 28,)
        assert np.allclose(matrix_minors(matrix), 0.0)

    @seed(77)
    @settings(max_examples=30, deadline=None)
    @given(state_seed=SEEDS, block=st.sets(st.integers(min_value=1, max_value=5), min_size=1, max_size=3))
    def test_minor_norm_matches_purity(self, state_seed, block):
        """Test the minor expansion against 2(Tr ρ² - 2^-m)."""
        # WHAT: Random 5-qubit states and random blocks
        # WHY: Both give ξ² of the block
        state = random_pure_state(5, seed=state_seed)

        assert minor_norm_sq(state, block) == pytest.approx(
            coherent_norm_sq(reduced_density(state, block)), abs=1e-10
        )


class TestClosedForms:
    """Test suite for the three- and four-qubit expansions."""

    @seed(31)
    @settings(max_examples=50, deadline=None)
    @given(state_seed=SEEDS)
    def test_three_qubit_norms(self, state_seed):
        """Test the six-term expansion of every part."""
        # WHAT: polarized_norms_3q against the Bloch vectors
        # WHY: Closed form and direct reduction must agree
        state = random_pure_state(3, seed=state_seed)
        norms = polarized_norms_3q(state)

        for part in (1, 2, 3):
            assert norms[part] == pytest.approx(polarized_vector(state, part).norm_sq, abs=1e-12)

    def test_three_qubit_requires_three(self, bell):
        """Test that other sizes are refused."""
        # WHAT: Two-qubit input
        # WHY: The letters a…h name three-qubit coefficients
        with pytest.raises(ValueError, match="3-qubit"):
            polarized_norms_3q(bell)

    def test_two_qubit_norm(self):
        """Test 1 - 4|ad - bc|² on the Bell state and a basis state."""
        # WHAT: Extreme cases
        # WHY: 0 for maximally entangled, 1 for product
        assert two_qubit_norm(bell_state()) == pytest.approx(0.0)
        assert two_qubit_norm(basis_state("10")) == pytest.approx(1.0)

    def test_pair_minor_count(self):
        """Test that the four-qubit expansion has 36 distinct minors."""
        # WHAT: Size of the quadruple list
        # WHY: C(4,2) x C(4,2)
        assert len(set(PAIR_A3A4_MINORS_4Q)) == 36

    @seed(64)
    @settings(max_examples=40, deadline=None)
    @given(state_seed=SEEDS)
    def test_pair_norm(self, state_seed):
        """Test the 36-term expansion of {A3, A4}."""
        # WHAT: pair_norm_sq_4q against the generic minor expansion
        # WHY: Same quantity written out term by term
        state = random_pure_state(4, seed=state_seed)

        assert pair_norm_sq_4q(state) == pytest.approx(minor_norm_sq(state, [3, 4]), abs=1e-12)

    def test_ghz4_pair(self):
        """Test ξ² of {A3, A4} in GHZ4."""
        # WHAT: Closed form on GHZ4
        # WHY: Tr ρ² = 1/2 gives ξ² = 2(1/2 - 1/4)
        assert pair_norm_sq_4q(ghz_state(4)) == pytest.approx(0.5)

    def test_coefficient_vectors(self):
        """Test that v_k collects the amplitudes whose last two bits spell k - 1."""
        # WHAT: |0001⟩ lands in v₂
        # WHY: x₂ is the first entry of v₂
        vectors = coefficient_vectors_4q(basis_state("0001"))

        assert np.allclose(vectors[1], [1, 0, 0, 0])
        assert all(np.allclose(vectors[k], 0) for k in (0, 2, 3))

    @seed(16)
    @settings(max_examples=40, deadline=None)
    @given(state_seed=SEEDS, ratio_re=st.floats(-2, 2), ratio_im=st.floats(-2, 2))
    def test_proportional_vectors_separate(self, state_seed, ratio_re, ratio_im):
        """Test that v₁ = r·v₂ with v₃ = v₄ = 0 makes {A3, A4} separable."""
        # WHAT: Build the state and evaluate the 36-term form
        # WHY: Every minor vanishes, so ξ² reaches 3/2
        rng = np.random.default_rng(state_seed)
        v2 = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        state = proportional_state_4q(v2, complex(ratio_re, ratio_im))

        assert pair_norm_sq_4q(state) == pytest.approx(1.5, abs=1e-10)

    def test_proportional_state_length(self):
        """Test that v₂ must have four entries."""
        # WHAT: Three entries
        # WHY: One per A1A2 basis ket
        with pytest.raises(ValueError, match="4 entries"):
            proportional_state_4q([1, 0, 0], 1.0)
