"""
Seeded Monte Carlo trials of the full FLCC protocol.

Every trial derives all of its randomness from one integer seed, and campaign
seeds are derived from (master_seed, trial index), so trials can run in any
order or in parallel and still aggregate to identical statistics.
"""

import logging
import math
from enum import Enum
from typing import Optional

import numpy as np
from joblib import Parallel, delayed
from pydantic import BaseModel, Field

from foldcc.codes.bounds import bound_ours
from foldcc.config import ExperimentConfig
from foldcc.core.field import stack
from foldcc.protocol.decoding import DecodeMode, master_decode
from foldcc.protocol.encoding import WorkerReturn, flcc_encode, worker_compute
from foldcc.protocol.jobs import PolynomialJob, get_job
from foldcc.protocol.params import FlccParams, MatrixDataset
from foldcc.sim.adversary import AdversaryKind, AdversaryModel, choose_corrupted, corrupt

logger = logging.getLogger(__name__)


class Outcome(str, Enum):
    SUCCESS = "success"
    DETECTED_FAILURE = "detected_failure"
    SILENT_ERROR = "silent_error"
    OUT_OF_GUARANTEE = "out_of_guarantee"


def trial_seed(master_seed: int, index: int) -> int:
    """Seed of trial ``index``, mixed from the master seed by numpy's SeedSequence."""
    state = np.random.SeedSequence([master_seed, index]).generate_state(1, dtype=np.uint64)
    return int(state[0])


def classify(succeeded: bool, correct: bool, within_guarantee: bool) -> Outcome:
    """Map a decode result to an outcome; successes are always reported as success."""
    if succeeded and correct:
        return Outcome.SUCCESS
    if not within_guarantee:
        return Outcome.OUT_OF_GUARANTEE
    return Outcome.SILENT_ERROR if succeeded else Outcome.DETECTED_FAILURE


class TrialReport(BaseModel):
    outcome: Outcome
    l_observed: int
    side_info_evals: int
    seed: int
    adversaries: int
    stragglers: int
    within_guarantee: bool
    theoretical_bound: Optional[float] = 1.0
    entry_dimensions: list[int] = Field(default_factory=list)


def _union_bound(params: FlccParams, dimensions: list[int], t: int) -> float:
    """Lower bound on the chance that t random points prune every entry."""
    k = params.decode_k
    usable = [l for l in dimensions if l >= 0]
    miss = sum(1 - bound_ours(params.field.q, k, l, t) for l in usable)
    return max(0.0, 1.0 - miss)


def run_trial(
    params: FlccParams,
    job: PolynomialJob,
    adv: AdversaryModel,
    stragglers: int,
    mode: DecodeMode,
    seed: int,
    data_shape: tuple[int, int] = (2, 2),
    consistency_check: bool = False,
) -> TrialReport:
    """Encode random data, simulate workers, decode and compare to ground truth.

    Stragglers are chosen uniformly among all workers and adversaries among
    the rest. Aliasing adversaries all return their share of one alternate
    random encoding.
    """
    rng = np.random.default_rng(seed)
    field = params.field
    dataset = job.evaluate(MatrixDataset.random(field, params.outputs, data_shape, rng))
    encoding = flcc_encode(dataset, params, rng_seed=int(rng.integers(2**32)))

    honest = stack(
        [worker_compute(i, encoding.share(i), job).results for i in range(params.N)]  # type: ignore[misc]
    )
    erased = np.zeros(params.N, dtype=bool)
    erased[rng.choice(params.N, size=stragglers, replace=False)] = True
    corrupted = choose_corrupted(rng, erased, adv.count)

    alias = None
    if adv.kind == AdversaryKind.ALIASING:
        alternate = flcc_encode(
            field.random(rng, dataset.inputs.shape), params, rng_seed=int(rng.integers(2**32))
        )
        alias = job.apply_all(alternate.shares.reshape(-1, *data_shape)).reshape(honest.shape)
    received = corrupt(honest, corrupted, adv.kind, field, rng, alias)

    returns = [
        WorkerReturn.straggler(i) if erased[i] else WorkerReturn(worker=i, results=received[i])
        for i in range(params.N)
    ]
    if mode.predrawn:
        mode = mode.model_copy(update={"seed": int(rng.integers(2**32))})
    result = master_decode(returns, params, job, mode, encoding, consistency_check)

    correct = result.outputs is not None and bool(np.array_equal(result.outputs, dataset.outputs))
    within = stragglers <= params.S and adv.count <= params.threshold_exact
    outcome = classify(result.succeeded, correct, within)
    if outcome == Outcome.SILENT_ERROR:
        logger.warning(f"Silent error within guarantee (seed={seed})")

    # Only uniform draws have a closed-form bound.
    bound: Optional[float] = 1.0
    if mode.kind == "probabilistic":
        bound = _union_bound(params, result.entry_dimensions, mode.t)
    elif mode.kind == "structured":
        bound = None
    return TrialReport(
        outcome=outcome,
        l_observed=result.max_dimension,
        side_info_evals=result.side_info_points,
        seed=seed,
        adversaries=adv.count,
        stragglers=stragglers,
        within_guarantee=within,
        theoretical_bound=bound,
        entry_dimensions=result.entry_dimensions,
    )


class CampaignStats(BaseModel):
    """Order-independent aggregate of trial reports."""

    trials: int = 0
    successes: int = 0
    detected_failures: int = 0
    silent_errors: int = 0
    out_of_guarantee: int = 0
    side_info_total: int = 0
    bound_total: float = 0.0
    bound_trials: int = 0
    dimension_histogram: dict[int, int] = Field(default_factory=dict)
    seed: Optional[int] = None

    def add(self, report: TrialReport) -> None:
        self.trials += 1
        if report.outcome == Outcome.SUCCESS:
            self.successes += 1
        elif report.outcome == Outcome.DETECTED_FAILURE:
            self.detected_failures += 1
        elif report.outcome == Outcome.SILENT_ERROR:
            self.silent_errors += 1
        else:
            self.out_of_guarantee += 1
        self.side_info_total += report.side_info_evals
        if report.theoretical_bound is not None:
            self.bound_total += report.theoretical_bound
            self.bound_trials += 1
        self.dimension_histogram[report.l_observed] = (
            self.dimension_histogram.get(report.l_observed, 0) + 1
        )

    @property
    def empirical_rate(self) -> float:
        return self.successes / self.trials if self.trials else 0.0

    @property
    def theoretical_bound(self) -> Optional[float]:
        """Mean per-trial bound; None when no trial had one."""
        return self.bound_total / self.bound_trials if self.bound_trials else None

    @property
    def side_info_mean(self) -> float:
        return self.side_info_total / self.trials if self.trials else 0.0

    def margin(self) -> float:
        """Three standard errors of the empirical rate."""
        if not self.trials:
            return 0.0
        p = self.empirical_rate
        return 3 * math.sqrt(p * (1 - p) / self.trials)

    def summary(self) -> dict[str, object]:
        """The JSON summary emitted by ``foldcc simulate``."""
        return {
            "trials": self.trials,
            "successes": self.successes,
            "detected_failures": self.detected_failures,
            "silent_errors": self.silent_errors,
            "out_of_guarantee": self.out_of_guarantee,
            "empirical_rate": round(self.empirical_rate, 6),
            "theoretical_bound": _rounded(self.theoretical_bound),
            "margin": round(self.margin(), 6),
            "side_info_mean": round(self.side_info_mean, 6),
            "dimension_histogram": {str(k): v for k, v in sorted(self.dimension_histogram.items())},
            "seed": self.seed,
        }


def _rounded(value: Optional[float]) -> Optional[float]:
    return None if value is None else round(value, 6)


def run_campaign(
    config: ExperimentConfig,
    trials: Optional[int] = None,
    master_seed: Optional[int] = None,
    n_jobs: Optional[int] = None,
) -> CampaignStats:
    """Run ``trials`` seeded trials of ``config`` and aggregate them.

    Arguments left as None fall back to the config's values.
    """
    trials = config.trials if trials is None else trials
    master_seed = config.seed if master_seed is None else master_seed
    n_jobs = config.n_jobs if n_jobs is None else n_jobs
    if trials < 1:
        raise ValueError(f"trials={trials} must be >= 1")

    params = config.to_params()
    job = get_job(config.job)
    adv = config.adversary_model()
    mode = config.decode_mode()
    logger.info(
        f"Campaign: {trials} trials, N={params.N} m={params.m} A={adv.count} "
        f"({adv.kind.value}), mode={mode.kind}, seed={master_seed}"
    )

    reports = Parallel(n_jobs=n_jobs, prefer="threads")(
        delayed(run_trial)(
            params,
            job,
            adv,
            params.S,
            mode,
            trial_seed(master_seed, index),
            (config.rows, config.cols),
            config.consistency_check,
        )
        for index in range(trials)
    )
    stats = CampaignStats(seed=master_seed)
    for report in reports:
        stats.add(report)
    logger.info(
        f"Campaign done: {stats.successes}/{stats.trials} successes, "
        f"{stats.silent_errors} silent errors"
    )
    return stats
