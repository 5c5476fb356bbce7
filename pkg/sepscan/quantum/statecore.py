"""State construction, outer products, partial traces and purity.

Every function here is pure: inputs are frozen models and results are new
models. Qubits are addressed by label (A₁ is label 1); a state's ``labels``
tuple says which label sits in which tensor slot.
"""

import logging
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from sepscan.configs.settings import settings
from sepscan.models.state import DensityMatrix, PureState, Subsystem

logger = logging.getLogger(__name__)

BlockLike = Union[Subsystem, Iterable[int]]


def as_subsystem(block: BlockLike) -> Subsystem:
    if isinstance(block, Subsystem):
        return block
    return Subsystem(labels=tuple(block))


def density_from_pure(state: PureState) -> DensityMatrix:
    """Outer product |ψ⟩⟨ψ|; entry (j, k) is ψ_j·conj(ψ_k)."""
    psi = state.amplitudes
    return DensityMatrix(
        m=state.n, entries=np.outer(psi, psi.conj()), labels=state.labels
    )


def partial_trace(rho: DensityMatrix, keep: BlockLike) -> DensityMatrix:
    """Trace out every qubit not in ``keep``.

    The kept qubits come out in ascending label order.
    """
    keep = as_subsystem(keep)
    kept = [rho.slot_of(label) for label in keep.labels]
    traced = [slot for slot in range(rho.m) if slot not in kept]
    dk, dt = 2 ** len(kept), 2 ** len(traced)

    tensor = rho.entries.reshape((2,) * (2 * rho.m))
    order = kept + traced + [rho.m + s for s in kept] + [rho.m + s for s in traced]
    blocks = tensor.transpose(order).reshape(dk, dt, dk, dt)
    reduced = np.einsum("ajbj->ab", blocks)
    return DensityMatrix(m=len(kept), entries=reduced, labels=keep.labels)


def bipartition_matrix(state: PureState, block: BlockLike) -> np.ndarray:
    """Amplitudes reshaped to (complement basis) x (block basis).

    Both sides are laid out in ascending label order, which is the layout
    reached by rearranging the block to the end of the register.
    """
    block = as_subsystem(block)
    cols = state.slots_of(block)
    rows = [state.slot_of(label) for label in sorted(set(state.labels) - set(block.labels))]
    matrix = state.tensor.transpose(rows + cols)
    return matrix.reshape(2 ** len(rows), 2 ** len(cols))


def reduced_density(state: PureState, keep: BlockLike) -> DensityMatrix:
    """Reduced density matrix on ``keep`` straight from the amplitudes.

    Equals ``partial_trace(density_from_pure(state), keep)`` without
    materializing the 2ⁿ×2ⁿ matrix.
    """
    keep = as_subsystem(keep)
    if keep.size > settings.density_max_qubits:
        raise ValueError(
            f"reduced state on {keep.size} qubits exceeds the cap of "
            f"{settings.density_max_qubits}"
        )
    matrix = bipartition_matrix(state, keep).T
    return DensityMatrix(
        m=keep.size, entries=matrix @ matrix.conj().T, labels=keep.labels
    )


def purity(rho: DensityMatrix) -> float:
    """Tr ρ²."""
    return float(np.real(np.einsum("ij,ji->", rho.entries, rho.entries)))


def cut_purity(state: PureState, block: BlockLike) -> float:
    """Tr ρ_B² for the block B, computed on whichever side of the cut is smaller."""
    block = as_subsystem(block)
    matrix = bipartition_matrix(state, block)
    if matrix.shape[0] < matrix.shape[1]:
        gram = matrix @ matrix.conj().T
    else:
        gram = matrix.T @ matrix.conj()
    return float(np.real(np.vdot(gram, gram)))


def random_pure_state(
    n: int, seed: int, labels: Optional[Sequence[int]] = None
) -> PureState:
    """Independent complex Gaussian amplitudes, normalized. Deterministic per seed."""
    if n < 1:
        raise ValueError(f"qubit count must be at least 1, got {n}")
    rng = np.random.default_rng(seed)
    dim = 2**n
    amplitudes = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return PureState.from_unnormalized(amplitudes, labels=labels)


def random_block_product(n: int, seed: int) -> tuple[PureState, list[tuple[int, ...]]]:
    """Random states on a random partition of 1..n, tensored together.

    Returns the state and the partition, each block in ascending order.
    """
    if n < 2:
        raise ValueError(f"block products need at least 2 qubits, got {n}")
    rng = np.random.default_rng(seed)
    labels = rng.permutation(np.arange(1, n + 1))
    cut_count = int(rng.integers(1, n))
    cuts = np.sort(rng.choice(np.arange(1, n), size=cut_count, replace=False))
    blocks = [tuple(sorted(int(label) for label in piece)) for piece in np.split(labels, cuts)]
    factors = [
        random_pure_state(len(block), int(rng.integers(2**32)), labels=block)
        for block in blocks
    ]
    return tensor_product(*factors), sorted(blocks)


def random_mixed_state(m: int, components: int, seed: int) -> DensityMatrix:
    """Convex mixture of ``components`` random pure states with random weights."""
    if components < 1:
        raise ValueError(f"need at least one component, got {components}")
    rng = np.random.default_rng(seed)
    weights = rng.random(components)
    weights /= weights.sum()
    entries = np.zeros((2**m, 2**m), dtype=np.complex128)
    for weight in weights:
        psi = rng.standard_normal(2**m) + 1j * rng.standard_normal(2**m)
        psi /= np.linalg.norm(psi)
        entries += weight * np.outer(psi, psi.conj())
    return DensityMatrix(m=m, entries=entries)


def basis_state(bits: Union[str, Sequence[int]]) -> PureState:
    """Computational basis ket, e.g. ``basis_state("0101")`` for |0101⟩."""
    digits = [int(bit) for bit in bits]
    if not digits or any(bit not in (0, 1) for bit in digits):
        raise ValueError(f"basis state needs a nonempty bit string, got {bits!r}")
    amplitudes = np.zeros(2 ** len(digits), dtype=np.complex128)
    amplitudes[int("".join(map(str, digits)), 2)] = 1.0
    return PureState(amplitudes=amplitudes)


def ghz_state(n: int) -> PureState:
    """(|0…0⟩ + |1…1⟩)/√2."""
    if n < 2:
        raise ValueError(f"GHZ state needs at least 2 qubits, got {n}")
    amplitudes = np.zeros(2**n, dtype=np.complex128)
    amplitudes[0] = amplitudes[-1] = 1.0
    return PureState.from_unnormalized(amplitudes)


def w_state(n: int) -> PureState:
    """Equal superposition of the n single-excitation kets."""
    if n < 2:
        raise ValueError(f"W state needs at least 2 qubits, got {n}")
    amplitudes = np.zeros(2**n, dtype=np.complex128)
    for j in range(n):
        amplitudes[1 << j] = 1.0
    return PureState.from_unnormalized(amplitudes)


def bell_state() -> PureState:
    """(|00⟩ + |11⟩)/√2."""
    return ghz_state(2)


def product_state(*states: PureState) -> PureState:
    """Kronecker product of the factors in the order given, relabeled 1..N."""
    if not states:
        raise ValueError("product_state needs at least one factor")
    amplitudes = states[0].amplitudes
    for state in states[1:]:
        amplitudes = np.kron(amplitudes, state.amplitudes)
    return PureState(amplitudes=amplitudes)


def tensor_product(*states: PureState) -> PureState:
    """Combine factors on disjoint labels into one state in ascending label order."""
    if not states:
        raise ValueError("tensor_product needs at least one factor")
    labels = [label for state in states for label in state.labels]
    if len(set(labels)) != len(labels):
        raise ValueError(f"factor labels overlap: {labels}")
    amplitudes = states[0].amplitudes
    for state in states[1:]:
        amplitudes = np.kron(amplitudes, state.amplitudes)
    order = sorted(range(len(labels)), key=lambda slot: labels[slot])
    tensor = amplitudes.reshape((2,) * len(labels)).transpose(order)
    return PureState(amplitudes=tensor.reshape(-1), labels=sorted(labels))


def overlap(a: PureState, b: PureState) -> float:
    """|⟨a|b⟩|, which is 1 exactly when the states agree up to global phase."""
    if a.labels != b.labels:
        raise ValueError(f"cannot compare states on {a.labels} and {b.labels}")
    return float(abs(np.vdot(a.amplitudes, b.amplitudes)))


def canonical_phase(state: PureState, tolerance: Optional[float] = None) -> PureState:
    """Rotate the global phase so the first nonzero amplitude is real and positive."""
    tolerance = settings.tolerance if tolerance is None else tolerance
    amplitudes = state.amplitudes
    leading = amplitudes[np.flatnonzero(np.abs(amplitudes) > tolerance)[0]]
    rotated = amplitudes * (abs(leading) / leading)
    return PureState(amplitudes=rotated, labels=state.labels)


def apply_single_qubit(state: PureState, part: int, unitary: np.ndarray) -> PureState:
    """Apply a 2x2 operator to the qubit labelled ``part``."""
    unitary = np.asarray(unitary, dtype=np.complex128)
    if unitary.shape != (2, 2):
        raise ValueError(f"single-qubit operator must be 2x2, got {unitary.shape}")
    slot = state.slot_of(part)
    tensor = np.tensordot(unitary, state.tensor, axes=([1], [slot]))
    tensor = np.moveaxis(tensor, 0, slot)
    return PureState(amplitudes=tensor.reshape(-1), labels=state.labels)


def apply_local_unitaries(state: PureState, unitaries: Sequence[np.ndarray]) -> PureState:
    """Apply one 2x2 unitary per slot, first to the qubit in slot 1."""
    if len(unitaries) != state.n:
        raise ValueError(f"need {state.n} local unitaries, got {len(unitaries)}")
    for label, unitary in zip(state.labels, unitaries):
        state = apply_single_qubit(state, label, unitary)
    return state
