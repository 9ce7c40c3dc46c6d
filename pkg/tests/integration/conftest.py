"""Integration test fixtures.

Desk-scale configurations that run a full trial in well under a second. All
components are real; campaigns use few trials.
"""

import pytest

from foldcc.config import ExperimentConfig
from foldcc.sim.roundtrip import RoundtripConfig


@pytest.fixture
def desk_config():
    """The desk deployment at its guaranteed adversary count A = 19."""
    return ExperimentConfig(q=257, N=40, K=2, T=1, S=2, A=19, m=4, job="square", seed=7)


@pytest.fixture
def roundtrip_config():
    """FRS roundtrip with m=4, n=32, k=4, s=2 at the 4-error radius."""
    return RoundtripConfig(q=257, m=4, n=32, k=4, s=2, errors=4, trials=40, seed=3)
