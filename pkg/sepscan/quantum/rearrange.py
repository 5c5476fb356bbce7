"""Exchanging operators and rearranged transformations on qubit slots.

States are rearranged by permuting tensor axes. The explicit 2ⁿ×2ⁿ operators
built here serve as a cross-check for small n.
"""

import logging
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from sepscan.models.rearrange import RearrangePlan
from sepscan.models.state import DensityMatrix, PureState

logger = logging.getLogger(__name__)

OPERATOR_MAX_QUBITS = 6


def swap_matrix() -> np.ndarray:
    """The two-qubit exchange S with S(M₁⊗M₂)S = M₂⊗M₁ and S = S⁻¹ = S†."""
    return np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]],
        dtype=np.complex128,
    )


def _check_slot(n: int, slot: int) -> None:
    if not 1 <= slot <= n:
        raise ValueError(f"slot {slot} is outside 1..{n}")


def _moves_to(source: int, target: int) -> list[tuple[int, int]]:
    return [(j, j + 1) for j in range(source, target)]


def move_to_end(n: int, i: int) -> RearrangePlan:
    """Carry slot i to slot n through S_{i,i+1}, …, S_{n−1,n}."""
    _check_slot(n, i)
    return RearrangePlan.from_moves(n, _moves_to(i, n))


def move_block_to_end(n: int, block: Iterable[int]) -> RearrangePlan:
    """Carry the given slots to the tail, keeping them in ascending order.

    The largest slot goes to n first, the next largest to n−1, and so on;
    the slots below a moved one are never disturbed.
    """
    slots = sorted(set(block))
    if not slots:
        raise ValueError("block must name at least one slot")
    moves: list[tuple[int, int]] = []
    target = n
    for slot in reversed(slots):
        _check_slot(n, slot)
        moves.extend(_moves_to(slot, target))
        target -= 1
    return RearrangePlan.from_moves(n, moves)


def _slot_order(plan: RearrangePlan) -> list[int]:
    return [p - 1 for p in plan.net_permutation]


def apply_plan_state(state: PureState, plan: RearrangePlan) -> PureState:
    """Permute amplitude axes; slot p of the result holds old slot net_permutation[p]."""
    if plan.n != state.n:
        raise ValueError(f"plan is for {plan.n} qubits, state has {state.n}")
    order = _slot_order(plan)
    tensor = state.tensor.transpose(order)
    labels = tuple(state.labels[slot] for slot in order)
    return PureState(amplitudes=tensor.reshape(-1), labels=labels)


def apply_plan_density(rho: DensityMatrix, plan: RearrangePlan) -> DensityMatrix:
    """Conjugate ρ by the plan's permutation."""
    if plan.n != rho.m:
        raise ValueError(f"plan is for {plan.n} qubits, density matrix has {rho.m}")
    order = _slot_order(plan)
    tensor = rho.entries.reshape((2,) * (2 * rho.m))
    tensor = tensor.transpose(order + [rho.m + slot for slot in order])
    labels = tuple(rho.labels[slot] for slot in order)
    return DensityMatrix(
        m=rho.m, entries=tensor.reshape(rho.dimension, rho.dimension), labels=labels
    )


def _check_operator_size(n: int) -> None:
    if n > OPERATOR_MAX_QUBITS:
        raise ValueError(
            f"explicit operators are built only up to {OPERATOR_MAX_QUBITS} qubits, got {n}"
        )


def lifted_swap(n: int, j: int) -> np.ndarray:
    """I⊗…⊗S_{j,j+1}⊗…⊗I on n qubits."""
    _check_operator_size(n)
    if not 1 <= j < n:
        raise ValueError(f"exchange ({j}, {j + 1}) is outside 1..{n}")
    return reduce(
        np.kron,
        [np.eye(2 ** (j - 1)), swap_matrix(), np.eye(2 ** (n - j - 1))],
    )


def plan_operator(plan: RearrangePlan) -> np.ndarray:
    """Product of lifted exchanges, last move leftmost."""
    _check_operator_size(plan.n)
    operator = np.eye(2**plan.n, dtype=np.complex128)
    for j, _ in plan.moves:
        operator = lifted_swap(plan.n, j) @ operator
    return operator


def permutation_operator(n: int, permutation: Sequence[int]) -> np.ndarray:
    """0/1 matrix sending basis ket bits b to b' with b'_p = b_{permutation[p]}."""
    _check_operator_size(n)
    if sorted(permutation) != list(range(1, n + 1)):
        raise ValueError(f"{permutation} is not a permutation of 1..{n}")
    dim = 2**n
    rows = np.eye(dim, dtype=np.complex128).reshape((2,) * n + (dim,))
    order = [p - 1 for p in permutation] + [n]
    return rows.transpose(order).reshape(dim, dim)
