"""
Common test fixtures for unit, integration and end-to-end tests.

Fields, code parameters and protocol parameters used across the suite. All
randomness is seeded so every test is reproducible.
"""

import numpy as np
import pytest

from foldcc.codes.frs import FrsParams
from foldcc.core.field import PrimeField
from foldcc.protocol.params import FlccParams


def pytest_addoption(parser):
    """Add custom pytest command line options."""
    parser.addoption(
        "--e2e-trials",
        action="store",
        type=int,
        default=None,
        help="Cap the number of trials of every end-to-end campaign",
    )


@pytest.fixture
def f17():
    """F_17 with primitive element 3."""
    return PrimeField(q=17, gamma=3)


@pytest.fixture
def f257():
    """F_257 with primitive element 3."""
    return PrimeField(q=257, gamma=3)


@pytest.fixture
def rng():
    """Seeded generator for property-style loops."""
    return np.random.default_rng(20240611)


@pytest.fixture
def frs_m4(f257):
    """FRS code with m=4, n=32, k=4: 8 symbols, radius 4 symbols at s=2."""
    return FrsParams(field=f257, n=32, m=4, k=4)


@pytest.fixture
def frs_oracle(f17):
    """Tiny FRS code with m=2, n=8, k=2 whose 289 polynomials can be enumerated."""
    return FrsParams(field=f17, n=8, m=2, k=2)


@pytest.fixture
def desk_params(f257):
    """Desk-scale FLCC deployment: s*=2, k=23, flcc_threshold_exact=19."""
    return FlccParams(field=f257, N=40, K=2, T=1, S=2, m=4, D2=2)


@pytest.fixture
def figure_family():
    """(N, K, T, S, D2) of the large threshold tables."""
    return (1000, 180, 11, 20, 2)


@pytest.fixture(scope="session")
def f_wide():
    """F_q for the largest 64-bit prime, q = 2^64 - 59, beyond the int64 range."""
    return PrimeField.from_modulus(2**64 - 59)
