"""Acceptance campaigns for the codec, pruning and the full protocol.

Every campaign is seeded; the expected rates are exact (100%) except for
probabilistic pruning, which is compared to its closed-form bound.
"""

import numpy as np
import pytest

from foldcc.codes.frs import FrsCodeword, guaranteed_errors, list_decode
from foldcc.config import ExperimentConfig
from foldcc.sim.harness import run_campaign
from foldcc.sim.roundtrip import RoundtripConfig, run_roundtrip_campaign
from foldcc.utils.reports import summary_to_json

DESK = dict(q=257, N=40, K=2, T=1, S=2, m=4)


@pytest.mark.e2e
class TestFrsCampaigns:
    """Radius and erasure behaviour of the FRS list decoder."""

    @pytest.mark.parametrize("adversary", ["uniform_random", "aliasing", "symbol_burst"])
    def test_four_errors_of_eight(self, trials, adversary):
        """Test 4 corrupted symbols, above unique decoding, are always recovered."""
        config = RoundtripConfig(
            q=257, m=4, n=32, k=4, s=2, errors=4, trials=trials(10000), seed=1,
            adversary=adversary, n_jobs=-1,
        )
        summary = run_roundtrip_campaign(config)
        assert summary["containment_rate"] == 1.0
        assert summary["recovery_rate"] == 1.0
        assert summary["silent_errors"] == 0

    def test_erasures_with_three_errors(self, trials):
        """Test 2 erasures and floor(5/9 * 6) = 3 errors are always recovered."""
        config = RoundtripConfig(
            q=257, m=4, n=32, k=4, s=2, errors=3, erasures=2, trials=trials(10000), seed=2,
            n_jobs=-1,
        )
        summary = run_roundtrip_campaign(config)
        assert summary["guaranteed_errors"] == 3
        assert summary["containment_rate"] == 1.0
        assert summary["recovery_rate"] == 1.0

    def test_oracle_equivalence(self, trials, frs_oracle):
        """Test 10^3 received words against enumeration of all 289 polynomials."""
        rng = np.random.default_rng(2024)
        field = frs_oracle.field
        c0, c1 = np.meshgrid(np.arange(17), np.arange(17), indexing="ij")
        coeffs = field.gf(np.stack([c0.ravel(), c1.ravel()], axis=1))
        points = frs_oracle.symbol_points()
        encodings = coeffs[:, :1, None] + coeffs[:, 1:, None] * points
        needed = 4 - guaranteed_errors(frs_oracle, 2)

        for trial in range(trials(1000)):
            base = field.random(rng, (4, 2))
            if trial % 2:
                base[:3] = encodings[int(rng.integers(289))][:3]
            word = FrsCodeword(symbols=base, erased=np.zeros(4, dtype=bool))
            result = list_decode(word, 2, frs_oracle)
            close = np.flatnonzero(np.all(encodings == base, axis=2).sum(axis=1) >= needed)
            if result.subspace is None:
                assert len(close) == 0
                continue
            assert result.dimension <= 1
            assert all(result.subspace.contains(coeffs[i]) for i in close)


@pytest.mark.e2e
class TestFlccCampaigns:
    """Full protocol campaigns on the desk deployment."""

    @pytest.mark.parametrize("job", ["square", "gram"])
    @pytest.mark.parametrize("adversary", ["uniform_random", "symbol_burst", "aliasing"])
    def test_deterministic_at_threshold(self, trials, job, adversary):
        """Test A = flcc_threshold_exact adversaries never prevent exact recovery."""
        config = ExperimentConfig(
            **DESK, A=19, job=job, adversary=adversary, trials=trials(1000), seed=3, n_jobs=-1
        )
        stats = run_campaign(config)
        assert stats.successes == stats.trials

    @pytest.mark.parametrize("t", [3, 6])
    def test_probabilistic_meets_bound(self, trials, t):
        """Test random side information succeeds at least as often as bound_ours predicts."""
        config = ExperimentConfig(
            **DESK, A=19, mode="probabilistic", t=t, trials=trials(10000), seed=4, n_jobs=-1
        )
        stats = run_campaign(config)
        assert stats.silent_errors == 0
        assert stats.successes + stats.detected_failures == stats.trials
        assert stats.empirical_rate >= stats.theoretical_bound - stats.margin()

    def test_same_seed_same_bytes(self, trials):
        """Test two campaigns with one master seed serialize identically."""
        config = ExperimentConfig(**DESK, A=19, trials=trials(200), seed=5)
        first = summary_to_json(run_campaign(config, n_jobs=1).summary())
        second = summary_to_json(run_campaign(config, n_jobs=-1).summary())
        assert first == second
