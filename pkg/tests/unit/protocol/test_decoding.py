"""
Unit tests for the element-wise master decoder.
"""

import numpy as np
import pytest

from foldcc.protocol.decoding import (
    DecodeMode,
    DecodeStatus,
    MasterDecodeResult,
    master_decode,
)
from foldcc.protocol.encoding import WorkerReturn, flcc_encode, worker_compute
from foldcc.protocol.jobs import get_job
from foldcc.protocol.params import FlccParams


@pytest.fixture
def small_params(f257):
    """Ten workers, m=2, one straggler allowed; k = 7 per entry."""
    return FlccParams(field=f257, N=10, K=1, T=1, S=1, m=2, D2=2)


@pytest.fixture
def honest_run(small_params, rng):
    """Encoded data and honest returns for the square job."""
    job = get_job("square")
    data = small_params.field.random(rng, (2, 2, 2))
    encoding = flcc_encode(data, small_params, rng_seed=11)
    returns = [worker_compute(i, encoding.share(i), job) for i in range(small_params.N)]
    return data, encoding, returns, job


@pytest.mark.unit
class TestDecodeMode:
    """Test side-information mode construction."""

    def test_deterministic(self):
        """Test the deterministic factory."""
        assert DecodeMode.deterministic().kind == "deterministic"

    def test_probabilistic(self):
        """Test the probabilistic factory keeps t and seed."""
        mode = DecodeMode.probabilistic(5, seed=9)
        assert (mode.kind, mode.t, mode.seed) == ("probabilistic", 5, 9)

    def test_probabilistic_needs_points(self):
        """Test probabilistic mode rejects t < 1."""
        with pytest.raises(ValueError):
            DecodeMode.probabilistic(0)

    def test_structured(self):
        """Test the structured factory draws before decoding."""
        mode = DecodeMode.structured(3, seed=1)
        assert (mode.kind, mode.t, mode.seed, mode.predrawn) == ("structured", 3, 1, True)
        assert not DecodeMode.deterministic().predrawn
        with pytest.raises(ValueError, match="structured"):
            DecodeMode.structured(0)


@pytest.mark.unit
class TestMasterDecode:
    """Test master decoding on honest and malformed returns."""

    def test_honest_deterministic(self, small_params, honest_run):
        """Test honest returns decode to g applied to each input."""
        data, encoding, returns, job = honest_run
        result = master_decode(returns, small_params, job, DecodeMode.deterministic(), encoding)
        assert result.status == DecodeStatus.SUCCESS
        assert np.array_equal(result.outputs, data * data)
        assert len(result.entry_dimensions) == 4

    def test_straggler_is_erasure(self, small_params, honest_run):
        """Test a missing worker is decoded around."""
        data, encoding, returns, job = honest_run
        returns = [WorkerReturn.straggler(3) if r.worker == 3 else r for r in returns]
        result = master_decode(returns, small_params, job, DecodeMode.deterministic(), encoding)
        assert result.succeeded
        assert np.array_equal(result.outputs, data * data)

    def test_honest_probabilistic(self, small_params, honest_run):
        """Test probabilistic mode evaluates exactly t points."""
        data, encoding, returns, job = honest_run
        mode = DecodeMode.probabilistic(4, seed=2)
        result = master_decode(returns, small_params, job, mode, encoding)
        assert result.side_info_points == 4
        assert result.succeeded

    def test_honest_structured(self, small_params, honest_run):
        """Test structured mode evaluates t geometric points and decodes."""
        data, encoding, returns, job = honest_run
        mode = DecodeMode.structured(4, seed=2)
        result = master_decode(returns, small_params, job, mode, encoding)
        assert result.side_info_points == 4
        assert result.succeeded
        assert np.array_equal(result.outputs, data * data)
        assert np.array_equal(result.outputs, data * data)

    def test_consistency_check_passes_honest(self, small_params, honest_run):
        """Test honest returns are never flagged."""
        data, encoding, returns, job = honest_run
        result = master_decode(
            returns, small_params, job, DecodeMode.deterministic(), encoding, consistency_check=True
        )
        assert result.succeeded and result.flagged_entries == []

    def test_parallel_entries_match_serial(self, small_params, honest_run):
        """Test joblib fan-out over entries gives the serial answer."""
        _, encoding, returns, job = honest_run
        mode = DecodeMode.deterministic()
        serial = master_decode(returns, small_params, job, mode, encoding, n_jobs=1)
        threaded = master_decode(returns, small_params, job, mode, encoding, n_jobs=2)
        assert np.array_equal(serial.outputs, threaded.outputs)

    def test_duplicate_workers(self, small_params, honest_run):
        """Test two returns from one worker raise."""
        _, encoding, returns, job = honest_run
        with pytest.raises(ValueError, match="duplicate"):
            master_decode(returns + returns[:1], small_params, job, DecodeMode(), encoding)

    def test_unknown_worker(self, small_params, honest_run):
        """Test a return from outside 0..N-1 raises."""
        _, encoding, returns, job = honest_run
        extra = WorkerReturn(worker=10, results=returns[0].results)
        with pytest.raises(ValueError, match="unknown"):
            master_decode(returns + [extra], small_params, job, DecodeMode(), encoding)

    def test_no_responders(self, small_params, honest_run):
        """Test all stragglers raise."""
        _, encoding, _, job = honest_run
        returns = [WorkerReturn.straggler(i) for i in range(small_params.N)]
        with pytest.raises(ValueError, match="no worker"):
            master_decode(returns, small_params, job, DecodeMode(), encoding)

    def test_wrong_fold(self, small_params, honest_run):
        """Test results with the wrong number of matrices raise."""
        _, encoding, returns, job = honest_run
        bad = [WorkerReturn(worker=r.worker, results=r.results[:1]) for r in returns]
        with pytest.raises(ValueError, match="m=2"):
            master_decode(bad, small_params, job, DecodeMode(), encoding)


@pytest.mark.unit
class TestMasterDecodeResult:
    """Test result helpers."""

    def test_max_dimension(self):
        """Test the largest entry dimension is reported and defaults to 0."""
        failed = MasterDecodeResult(
            status=DecodeStatus.DETECTED_FAILURE, outputs=None, entry_dimensions=[0, 1, -1],
            side_info_points=1,
        )
        assert failed.max_dimension == 1 and not failed.succeeded
        empty = MasterDecodeResult(
            status=DecodeStatus.SUCCESS, outputs=None, entry_dimensions=[], side_info_points=0
        )
        assert empty.max_dimension == 0
