"""Rearrangement Pydantic models."""

from pydantic import BaseModel, ConfigDict, Field, model_validator


def replay_moves(n: int, moves: tuple[tuple[int, int], ...]) -> tuple[int, ...]:
    """Slot contents after applying adjacent swaps to (1, …, n) in order."""
    order = list(range(1, n + 1))
    for j, _ in moves:
        order[j - 1], order[j] = order[j], order[j - 1]
    return tuple(order)


class RearrangePlan(BaseModel):
    """Ordered product of adjacent exchanges S_{j,j+1} acting on qubit slots.

    ``net_permutation[p]`` is the original slot whose content ends in slot p+1.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1, description="Qubit count")
    moves: tuple[tuple[int, int], ...] = Field(
        default=(), description="Adjacent transpositions (j, j+1), applied first to last"
    )
    net_permutation: tuple[int, ...] = Field(description="Resulting slot order")

    @model_validator(mode="after")
    def validate_moves(self):
        """Every move is adjacent and in range, and the moves realize the permutation."""
        for j, k in self.moves:
            if k != j + 1 or not 1 <= j < self.n:
                raise ValueError(f"invalid exchange ({j}, {k}) for n={self.n}")
        if replay_moves(self.n, self.moves) != self.net_permutation:
            raise ValueError("moves do not realize net_permutation")
        return self

    @classmethod
    def from_moves(cls, n: int, moves: list[tuple[int, int]]) -> "RearrangePlan":
        frozen = tuple((j, j + 1) for j, _ in moves)
        return cls(n=n, moves=frozen, net_permutation=replay_moves(n, frozen))

    def then(self, other: "RearrangePlan") -> "RearrangePlan":
        """This plan followed by ``other``."""
        if other.n != self.n:
            raise ValueError(f"cannot compose plans on {self.n} and {other.n} qubits")
        return RearrangePlan.from_moves(self.n, list(self.moves + other.moves))

    def inverse(self) -> "RearrangePlan":
        return RearrangePlan.from_moves(self.n, list(reversed(self.moves)))

    @property
    def is_identity(self) -> bool:
        return self.net_permutation == tuple(range(1, self.n + 1))
