"""Pauli tensor expansion and coherent vectors.

ρ = 2⁻ᵐ Σ a_μ σ^{μ₁}⊗…⊗σ^{μₘ} with a_μ = Tr(ρ·σ^{μ₁}⊗…⊗σ^{μₘ}). The coherent
vector drops a_{0…0} and rescales by 2^{−(m−1)/2}, the normalization of the
basis λ_μ with Tr(λ_s λ_t) = 2δ_st, so a pure m-qubit state has
‖ξ‖² = 2(1 − 2⁻ᵐ).
"""

import logging
from functools import reduce
from itertools import product
from typing import Optional, Sequence

import numpy as np

from sepscan.configs.settings import settings
from sepscan.models.pauli import CoherentVector, PauliTensor
from sepscan.models.state import DensityMatrix, PureState

logger = logging.getLogger(__name__)

# σ⁰ = I, σ¹ = X, σ² = Y, σ³ = Z
PAULI = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=np.complex128,
)
PAULI_NAMES = "IXYZ"

# row μ, column 2r+c holds σ^μ[c, r]: contracting it with ρ[r, c] gives Tr(ρσ^μ)
_TRACE_MAP = PAULI.transpose(0, 2, 1).reshape(4, 4)
# row 2r+c, column μ holds σ^μ[r, c] / 2
_RECON_MAP = PAULI.reshape(4, 4).T / 2


def _apply_per_axis(tensor: np.ndarray, matrix: np.ndarray) -> np.ndarray:
    for axis in range(tensor.ndim):
        tensor = np.moveaxis(np.tensordot(matrix, tensor, axes=([1], [axis])), 0, axis)
    return tensor


def _interleave(entries: np.ndarray, m: int) -> np.ndarray:
    """(2ᵐ, 2ᵐ) matrix to a (4,)*m tensor whose axis k indexes (r_k, c_k)."""
    tensor = entries.reshape((2,) * (2 * m))
    order = [axis for k in range(m) for axis in (k, m + k)]
    return tensor.transpose(order).reshape((4,) * m)


def _deinterleave(tensor: np.ndarray, m: int) -> np.ndarray:
    paired = tensor.reshape((2,) * (2 * m))
    order = list(range(0, 2 * m, 2)) + list(range(1, 2 * m, 2))
    return paired.transpose(order).reshape(2**m, 2**m)


def pauli_coefficients(entries: np.ndarray, m: int) -> np.ndarray:
    """Complex a_μ for a raw 2ᵐ×2ᵐ array, shape (4,)*m."""
    return _apply_per_axis(_interleave(np.asarray(entries, dtype=np.complex128), m), _TRACE_MAP)


def pauli_expand(rho: DensityMatrix, tolerance: Optional[float] = None) -> PauliTensor:
    """Real Pauli tensor of ``rho``."""
    tolerance = settings.tolerance if tolerance is None else tolerance
    coeffs = pauli_coefficients(rho.entries, rho.m)
    residue = float(np.max(np.abs(coeffs.imag)))
    if residue > tolerance:
        raise ValueError(
            f"Pauli coefficients carry imaginary residue {residue:.3g}; input is not Hermitian"
        )
    return PauliTensor(n=rho.m, coeffs=coeffs.real)


def reconstruct(tensor: PauliTensor) -> DensityMatrix:
    """Rebuild ρ = 2⁻ⁿ Σ a_μ σ^{μ₁}⊗…⊗σ^{μₙ}."""
    paired = _apply_per_axis(tensor.coeffs.astype(np.complex128), _RECON_MAP)
    return DensityMatrix(m=tensor.n, entries=_deinterleave(paired, tensor.n))


def pauli_operator(multi_index: Sequence[int]) -> np.ndarray:
    """σ^{μ₁}⊗…⊗σ^{μₘ} as a dense matrix."""
    return reduce(np.kron, (PAULI[mu] for mu in multi_index))


def pauli_label(multi_index: Sequence[int]) -> str:
    return "".join(PAULI_NAMES[mu] for mu in multi_index)


def _check_size(m: int) -> None:
    if m > settings.density_max_qubits:
        raise ValueError(
            f"coherent vectors are computed up to {settings.density_max_qubits} qubits, got {m}"
        )


def coherent_vector(rho: DensityMatrix) -> CoherentVector:
    """ξ_μ = 2^{−(m−1)/2}·a_μ for every multi-index except 0…0."""
    _check_size(rho.m)
    coeffs = pauli_expand(rho).coeffs.reshape(-1)[1:]
    return CoherentVector(m=rho.m, components=coeffs * 2.0 ** (-(rho.m - 1) / 2))


def coherent_vector_by_trace(rho: DensityMatrix) -> CoherentVector:
    """Same vector as :func:`coherent_vector`, one Tr(ρ·λ_μ) at a time."""
    if rho.m > settings.component_check_max_qubits:
        raise ValueError(
            f"explicit trace path is limited to {settings.component_check_max_qubits} qubits"
        )
    scale = 2.0 ** (-(rho.m - 1) / 2)
    components = [
        scale * np.real(np.trace(rho.entries @ pauli_operator(index)))
        for index in list(product(range(4), repeat=rho.m))[1:]
    ]
    return CoherentVector(m=rho.m, components=components)


def coherent_norm_sq(rho: DensityMatrix) -> float:
    """‖ξ‖² = 2(Tr ρ² − 2⁻ᵐ)."""
    entries = rho.entries
    purity = float(np.real(np.einsum("ij,ji->", entries, entries)))
    return 2.0 * (purity - 2.0**-rho.m)


def polarized_vector(state: PureState, part: int) -> CoherentVector:
    """Bloch vector of one qubit, from a 2x2 reduction of the amplitudes."""
    slot = state.slot_of(part)
    matrix = np.moveaxis(state.tensor, slot, 0).reshape(2, -1)
    rho = matrix @ matrix.conj().T
    components = [np.real(np.trace(rho @ PAULI[k])) for k in (1, 2, 3)]
    return CoherentVector(m=1, components=components)
