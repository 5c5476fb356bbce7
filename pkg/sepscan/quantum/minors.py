"""Closed-form ξ² through 2x2 minors of the reshaped amplitude matrix.

With ψ reshaped to M = (complement basis) x (block basis), Cauchy–Binet
gives ξ²_block = 2(1 − 2⁻ᵐ) − 4 Σ |2x2 minors of M|². For one qubit of a
three-qubit state this is the six-term expansion over the coefficients a…h,
and for A₃A₄ of a four-qubit state the 36-term expansion over x₁…x₁₆.
"""

from itertools import combinations
from typing import Optional

import numpy as np

from sepscan.configs.settings import settings
from sepscan.models.state import PureState
from sepscan.quantum.statecore import BlockLike, as_subsystem, bipartition_matrix

LETTERS = "abcdefgh"

# Six equalities pq = rs per part, letters a…h are |000⟩…|111⟩
PART_MINORS_3Q: dict[int, tuple[str, ...]] = {
    1: ("afbe", "agce", "ahde", "bgcf", "bhdf", "chdg"),
    2: ("adbc", "agce", "ahcf", "bgde", "bhdf", "ehfg"),
    3: ("adbc", "afbe", "ahbg", "cfde", "chdg", "ehfg"),
}

# (i, j, k, l) stands for x_i x_j − x_k x_l, 1-based over |0000⟩…|1111⟩
PAIR_A3A4_MINORS_4Q: tuple[tuple[int, int, int, int], ...] = (
    (1, 6, 2, 5), (1, 7, 3, 5), (1, 8, 4, 5), (1, 10, 2, 9),
    (1, 11, 3, 9), (1, 12, 4, 9), (1, 14, 2, 13), (1, 15, 3, 13),
    (1, 16, 4, 13), (2, 7, 3, 6), (2, 8, 4, 6), (2, 11, 3, 10),
    (2, 12, 4, 10), (2, 15, 3, 14), (2, 16, 4, 14), (3, 8, 4, 7),
    (3, 12, 4, 11), (3, 16, 4, 15), (5, 10, 6, 9), (5, 11, 7, 9),
    (5, 12, 8, 9), (5, 14, 6, 13), (5, 15, 7, 13), (5, 16, 8, 13),
    (6, 11, 7, 10), (6, 12, 8, 10), (6, 15, 7, 14), (6, 16, 8, 14),
    (7, 12, 8, 11), (7, 16, 8, 15), (9, 14, 10, 13), (9, 15, 11, 13),
    (9, 16, 12, 13), (10, 15, 11, 14), (10, 16, 12, 14), (11, 16, 12, 15),
)


def condition_name(p: str, q: str, r: str, s: str) -> str:
    """Canonical spelling of pq = rs: letters sorted in each product, smaller product first."""
    left, right = sorted(["".join(sorted(p + q)), "".join(sorted(r + s))])
    return f"{left}={right}"


def minor_value(amplitudes: np.ndarray, condition: str) -> complex:
    """pq − rs for a condition written ``"pq=rs"`` or ``"pqrs"``."""
    letters = condition.replace("=", "")
    if len(letters) != 4 or any(letter not in LETTERS for letter in letters):
        raise ValueError(f"malformed coefficient condition {condition!r}")
    p, q, r, s = (amplitudes[LETTERS.index(letter)] for letter in letters)
    return complex(p * q - r * s)


def evaluate_condition(
    amplitudes: np.ndarray, condition: str, tolerance: Optional[float] = None
) -> bool:
    """Whether pq = rs holds within tolerance."""
    tolerance = settings.tolerance if tolerance is None else tolerance
    return abs(minor_value(amplitudes, condition)) < tolerance


def matrix_minors(matrix: np.ndarray) -> np.ndarray:
    """Every 2x2 minor M[r1,c1]M[r2,c2] − M[r1,c2]M[r2,c1] with r1<r2, c1<c2."""
    r1, r2 = np.triu_indices(matrix.shape[0], k=1)
    c1, c2 = np.triu_indices(matrix.shape[1], k=1)
    minors = (
        matrix[np.ix_(r1, c1)] * matrix[np.ix_(r2, c2)]
        - matrix[np.ix_(r1, c2)] * matrix[np.ix_(r2, c1)]
    )
    return minors.reshape(-1)


def cut_minors(state: PureState, block: BlockLike) -> np.ndarray:
    """All 2x2 minors of the amplitude matrix across the block cut."""
    return matrix_minors(bipartition_matrix(state, as_subsystem(block)))


def minor_norm_sq(state: PureState, block: BlockLike) -> float:
    """ξ² of the block from its minors alone."""
    block = as_subsystem(block)
    minors = cut_minors(state, block)
    return 2.0 * (1.0 - 2.0**-block.size) - 4.0 * float(np.sum(np.abs(minors) ** 2))


def _require_qubits(state: PureState, n: int) -> None:
    if state.n != n:
        raise ValueError(f"expected a {n}-qubit state, got n={state.n}")


def polarized_norms_3q(state: PureState) -> dict[int, float]:
    """ξ²_{A₁}, ξ²_{A₂}, ξ²_{A₃} as 1 − 4 Σ|pq − rs|² over each part's six pairs."""
    _require_qubits(state, 3)
    amplitudes = state.amplitudes
    return {
        part: 1.0 - 4.0 * sum(abs(minor_value(amplitudes, pair)) ** 2 for pair in pairs)
        for part, pairs in PART_MINORS_3Q.items()
    }


def pair_norm_sq_4q(state: PureState) -> float:
    """ξ²_{A₃A₄} = 3/2 − 4 Σ |x_i x_j − x_k x_l|² over the 36 quadruples."""
    _require_qubits(state, 4)
    x = np.concatenate([[0.0], state.amplitudes])
    total = sum(abs(x[i] * x[j] - x[k] * x[l]) ** 2 for i, j, k, l in PAIR_A3A4_MINORS_4Q)
    return 1.5 - 4.0 * float(total)


def two_qubit_norm(state: PureState) -> float:
    """1 − 4|ad − bc|² for a|00⟩ + b|01⟩ + c|10⟩ + d|11⟩."""
    _require_qubits(state, 2)
    a, b, c, d = state.amplitudes
    return 1.0 - 4.0 * abs(a * d - b * c) ** 2


def coefficient_vectors_4q(state: PureState) -> list[np.ndarray]:
    """v₁…v₄: v_k collects the coefficients whose A₃A₄ bits spell k − 1."""
    _require_qubits(state, 4)
    matrix = state.amplitudes.reshape(4, 4)
    return [matrix[:, k].copy() for k in range(4)]


def proportional_state_4q(v2: np.ndarray, ratio: complex) -> PureState:
    """State with v₁ = ratio·v₂, v₂ as given and v₃ = v₄ = 0.

    It factors as (v₂·{|00⟩,|01⟩,|10⟩,|11⟩}) ⊗ (ratio|00⟩ + |01⟩).
    """
    v2 = np.asarray(v2, dtype=np.complex128).reshape(-1)
    if v2.size != 4:
        raise ValueError(f"v2 must have 4 entries, got {v2.size}")
    matrix = np.zeros((4, 4), dtype=np.complex128)
    matrix[:, 0] = ratio * v2
    matrix[:, 1] = v2
    return PureState.from_unnormalized(matrix.reshape(-1))


def part_conditions_3q(part: int) -> list[str]:
    """The six equalities of one part in canonical spelling."""
    return [condition_name(*pair) for pair in PART_MINORS_3Q[part]]


def support_minor_names(rows: list[int], cols: list[int], grid: dict[tuple[int, int], str]) -> list[str]:
    """Canonical names of the minors of a rows x cols letter grid."""
    names = []
    for r1, r2 in combinations(rows, 2):
        for c1, c2 in combinations(cols, 2):
            names.append(
                condition_name(grid[r1, c1], grid[r2, c2], grid[r1, c2], grid[r2, c1])
            )
    return names
