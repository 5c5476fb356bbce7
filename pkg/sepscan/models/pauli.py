"""Pauli-space Pydantic models."""

from itertools import product
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from sepscan.configs.settings import settings


class PauliTensor(BaseModel):
    """Real coefficients a_{μ₁…μₙ} = Tr(ρ·σ^{μ₁}⊗…⊗σ^{μₙ}), one axis of length 4 per qubit."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: int = Field(description="Qubit count")
    coeffs: np.ndarray = Field(description="Real tensor of shape (4,)*n")

    @model_validator(mode="before")
    @classmethod
    def validate_coeffs(cls, data: Any) -> Any:
        """Coefficients are real, shaped (4,)*n, with a_{0…0} = 1."""
        if not isinstance(data, dict):
            return data
        data = dict(data)
        n = data.get("n")
        coeffs = np.array(data.get("coeffs"), dtype=np.float64)
        if coeffs.shape != (4,) * n:
            raise ValueError(f"expected shape {(4,) * n}, got {coeffs.shape}")
        if abs(coeffs[(0,) * n] - 1.0) > settings.tolerance:
            raise ValueError(f"a_0 must be 1 for a unit-trace state, got {coeffs[(0,) * n]}")
        coeffs.setflags(write=False)
        data["coeffs"] = coeffs
        return data


class CoherentVector(BaseModel):
    """Traceless part of a reduced state in the normalized Pauli-product basis.

    Components are ordered lexicographically over (μ₁,…,μₘ), skipping the
    all-zero index. For m = 1 this is the polarized (Bloch) vector.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    m: int = Field(description="Qubit count of the subsystem")
    components: np.ndarray = Field(description="Real vector of length 4**m - 1")

    @model_validator(mode="before")
    @classmethod
    def validate_components(cls, data: Any) -> Any:
        """Length 4**m - 1 and norm bounded by 2(1 - 2**-m)."""
        if not isinstance(data, dict):
            return data
        data = dict(data)
        m = data.get("m")
        components = np.array(data.get("components"), dtype=np.float64).reshape(-1)
        if components.size != 4**m - 1:
            raise ValueError(
                f"expected {4**m - 1} components for m={m}, got {components.size}"
            )
        bound = 2.0 * (1.0 - 2.0**-m)
        if float(components @ components) > bound + settings.tolerance:
            raise ValueError(f"coherent vector norm exceeds the maximum {bound}")
        components.setflags(write=False)
        data["components"] = components
        return data

    @property
    def norm_sq(self) -> float:
        return float(self.components @ self.components)

    @property
    def max_norm_sq(self) -> float:
        return 2.0 * (1.0 - 2.0**-self.m)

    def multi_indices(self) -> list[tuple[int, ...]]:
        """Multi-index (μ₁,…,μₘ) of each component, in storage order."""
        return list(product(range(4), repeat=self.m))[1:]
