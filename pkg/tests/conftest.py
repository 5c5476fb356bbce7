"""Pytest configuration and shared fixtures."""

import numpy as np
import pytest

from sepscan.models.state import PureState
from sepscan.quantum.statecore import (basis_state, bell_state, ghz_state,
                                       product_state, w_state)
from sepscan.services.classification_service import ClassificationService
from sepscan.services.report_service import ReportService
from sepscan.services.separability_service import SeparabilityService


@pytest.fixture
def bell():
    """(|00⟩ + |11⟩)/√2."""
    return bell_state()


@pytest.fixture
def ghz3():
    return ghz_state(3)


@pytest.fixture
def ghz4():
    return ghz_state(4)


@pytest.fixture
def w3():
    return w_state(3)


@pytest.fixture
def zero_bell():
    """|0⟩ on A1 times a Bell pair on A2A3."""
    return product_state(basis_state("0"), bell_state())


@pytest.fixture
def bell_zero():
    """Bell pair on A1A2 times |0⟩ on A3."""
    return product_state(bell_state(), basis_state("0"))


@pytest.fixture
def bell_bell():
    """Bell pairs on A1A2 and A3A4."""
    return product_state(bell_state(), bell_state())


@pytest.fixture
def random_product3():
    """Product of three random single-qubit states."""
    rng = np.random.default_rng(2024)
    factors = [
        PureState.from_unnormalized(rng.standard_normal(2) + 1j * rng.standard_normal(2))
        for _ in range(3)
    ]
    return product_state(*factors)


@pytest.fixture
def separability_service():
    return SeparabilityService()


@pytest.fixture
def classification_service():
    return ClassificationService()


@pytest.fixture
def report_service():
    return ReportService()
