"""End-to-end test fixtures for foldcc.

Acceptance campaigns run 10^3 to 10^4 seeded trials each and take minutes.
They are deselected by default; run them with ``pytest -m e2e``. The
``--e2e-trials`` option caps every campaign for a quicker smoke pass.
"""

import pytest


@pytest.fixture
def trials(request):
    """Trial count of a campaign, capped by --e2e-trials when given."""

    def _trials(full: int) -> int:
        cap = request.config.getoption("--e2e-trials")
        return full if cap is None else min(full, cap)

    return _trials
