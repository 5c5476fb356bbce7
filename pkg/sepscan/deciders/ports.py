from typing import Protocol

from sepscan.models.state import PureState, Subsystem
from sepscan.models.verdict import Verdict


class SeparabilityDecider(Protocol):
    """Port for deciding whether a block factors off a pure state."""

    def decide(self, state: PureState, block: Subsystem) -> Verdict: ...


def check_block(state: PureState, block: Subsystem) -> None:
    """The block names known labels and leaves at least one qubit outside."""
    state.slots_of(block)
    if block.size >= state.n:
        raise ValueError(
            f"block {block.describe()} covers the whole {state.n}-qubit system"
        )
