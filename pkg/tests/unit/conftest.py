"""
Unit test fixtures for foldcc.

Unit tests exercise one module at a time over small fields. They never run
the full protocol or a campaign; those live in the integration and e2e suites.
"""

import pytest

from foldcc.core.linalg import AffineSolution


@pytest.fixture
def make_subspace():
    """Build an AffineSolution from integer particular/basis arrays."""

    def _make(field, particular, basis=None):
        particular = field.array(particular)
        basis = field.zeros((len(particular), 0)) if basis is None else field.array(basis)
        if basis.ndim == 1:
            basis = basis.reshape(-1, 1)
        return AffineSolution(
            particular=particular, basis=basis, free_rows=tuple(range(basis.shape[1]))
        )

    return _make
