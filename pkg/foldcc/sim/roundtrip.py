"""
FRS-only encode, corrupt, list decode and prune loop.

Exercises the codec and the pruning layer without the FLCC protocol around
them: the side information is simply the true polynomial evaluated at the
requested points.
"""

import logging
from fractions import Fraction
from typing import Optional

import numpy as np
from joblib import Parallel, delayed
from pydantic import BaseModel, ConfigDict, Field, model_validator

from foldcc.codes.bounds import bound_ours
from foldcc.codes.frs import (
    FrsCodeword,
    FrsParams,
    decoding_radius,
    frs_encode,
    guaranteed_errors,
    interpolation_degree,
    list_decode,
)
from foldcc.codes.pruning import (
    PruneOutcome,
    prune,
    select_points_deterministic,
    select_points_random,
    structured_points,
)
from foldcc.core.field import PrimeField
from foldcc.core.poly import poly_from_coeffs
from foldcc.exceptions import SideInformationMismatch
from foldcc.sim.adversary import AdversaryKind, choose_corrupted, corrupt
from foldcc.protocol.decoding import SideInfoKind
from foldcc.sim.harness import Outcome, classify, trial_seed

logger = logging.getLogger(__name__)


class RoundtripConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    q: int
    m: int
    n: int
    k: int
    s: int
    errors: int = Field(default=0, ge=0)
    erasures: int = Field(default=0, ge=0)
    trials: int = Field(default=100, ge=1)
    seed: int = 0
    adversary: AdversaryKind = AdversaryKind.UNIFORM_RANDOM
    mode: SideInfoKind = "deterministic"
    t: int = 0
    n_jobs: Optional[int] = None

    @model_validator(mode="after")
    def _validate_roundtrip(self) -> "RoundtripConfig":
        p = self.frs_params()
        if self.errors + self.erasures > p.N:
            raise ValueError(
                f"errors + erasures = {self.errors + self.erasures} exceeds N={p.N} symbols"
            )
        if interpolation_degree(p, self.s, self.erasures) < 0:
            raise ValueError(
                f"{self.erasures} erasures leave too few symbols to decode with s={self.s}"
            )
        if self.mode != "deterministic" and not 1 <= self.t <= self.q - 1:
            raise ValueError(f"{self.mode} mode needs 1 <= t <= q-1 side-information points")
        return self

    def frs_params(self) -> FrsParams:
        return FrsParams(field=PrimeField.from_modulus(self.q), n=self.n, m=self.m, k=self.k)


class RoundtripReport(BaseModel):
    outcome: Outcome
    contained: bool
    unique: bool
    dimension: int
    side_info_evals: int
    seed: int
    within_guarantee: bool
    theoretical_bound: Optional[float] = 1.0


def run_roundtrip_trial(config: RoundtripConfig, seed: int) -> RoundtripReport:
    """One encode, corrupt, decode, prune cycle on a random polynomial."""
    p = config.frs_params()
    rng = np.random.default_rng(seed)
    coeffs = p.field.random(rng, p.k)
    f = poly_from_coeffs(p.field, coeffs)
    word = frs_encode(f, p)

    erased = np.zeros(p.N, dtype=bool)
    erased[rng.choice(p.N, size=config.erasures, replace=False)] = True
    corrupted = choose_corrupted(rng, erased, config.errors)
    alias = None
    if config.adversary == AdversaryKind.ALIASING:
        alias = frs_encode(p.field.random(rng, p.k), p).symbols
    symbols = corrupt(word.symbols, corrupted, config.adversary, p.field, rng, alias)
    received = FrsCodeword(symbols=symbols, erased=erased)

    decoded = list_decode(received, config.s, p)
    contained = decoded.subspace is not None and decoded.subspace.contains(coeffs)
    dimension = -1 if decoded.dimension is None else decoded.dimension

    bound: Optional[float] = None if config.mode == "structured" else 1.0
    if decoded.subspace is None:
        outcome = PruneOutcome.failure("coefficient system inconsistent")
        evals = 0
    else:
        if config.mode == "probabilistic":
            request = select_points_random(config.t, int(rng.integers(2**32)), p.field)
            bound = bound_ours(p.field.q, p.k, dimension, config.t)
        elif config.mode == "structured":
            request = structured_points(config.t, int(rng.integers(2**32)), p.field)
        else:
            request = select_points_deterministic(decoded, p)
        evals = len(request)
        try:
            values = f(request.points) if len(request) else p.field.zeros(0)
            outcome = prune(decoded, request, values)
        except SideInformationMismatch as exc:
            outcome = PruneOutcome.failure(str(exc))

    unique = outcome.is_unique and bool(np.array_equal(outcome.coefficients, coeffs))
    within = config.errors <= guaranteed_errors(p, config.s, config.erasures)
    result = classify(outcome.is_unique, unique, within)
    if result == Outcome.SILENT_ERROR or (within and not contained):
        logger.warning(f"Roundtrip lost the true polynomial within the guarantee (seed={seed})")
    return RoundtripReport(
        outcome=result,
        contained=contained,
        unique=unique,
        dimension=dimension,
        side_info_evals=evals,
        seed=seed,
        within_guarantee=within,
        theoretical_bound=bound,
    )


class RoundtripStats(BaseModel):
    trials: int = 0
    contained: int = 0
    unique: int = 0
    successes: int = 0
    detected_failures: int = 0
    silent_errors: int = 0
    out_of_guarantee: int = 0
    bound_total: float = 0.0
    bound_trials: int = 0
    dimension_histogram: dict[int, int] = Field(default_factory=dict)

    def add(self, report: RoundtripReport) -> None:
        self.trials += 1
        self.contained += report.contained
        self.unique += report.unique
        counter = {
            Outcome.SUCCESS: "successes",
            Outcome.DETECTED_FAILURE: "detected_failures",
            Outcome.SILENT_ERROR: "silent_errors",
            Outcome.OUT_OF_GUARANTEE: "out_of_guarantee",
        }[report.outcome]
        setattr(self, counter, getattr(self, counter) + 1)
        if report.theoretical_bound is not None:
            self.bound_total += report.theoretical_bound
            self.bound_trials += 1
        self.dimension_histogram[report.dimension] = (
            self.dimension_histogram.get(report.dimension, 0) + 1
        )

    @property
    def containment_rate(self) -> float:
        return self.contained / self.trials if self.trials else 0.0

    @property
    def recovery_rate(self) -> float:
        return self.unique / self.trials if self.trials else 0.0


def run_roundtrip_campaign(config: RoundtripConfig) -> dict[str, object]:
    """Run ``config.trials`` roundtrips and return the JSON summary."""
    p = config.frs_params()
    fraction, radius = decoding_radius(p, config.s, config.erasures)
    guaranteed = guaranteed_errors(p, config.s, config.erasures)
    if config.errors > guaranteed:
        logger.warning(
            f"{config.errors} errors exceed the {guaranteed} guaranteed; "
            "failures are reported as out_of_guarantee"
        )
    logger.info(f"Roundtrip campaign: {config.trials} trials, seed={config.seed}")

    reports = Parallel(n_jobs=config.n_jobs, prefer="threads")(
        delayed(run_roundtrip_trial)(config, trial_seed(config.seed, index))
        for index in range(config.trials)
    )
    stats = RoundtripStats()
    for report in reports:
        stats.add(report)
    return {
        "trials": stats.trials,
        "containment_rate": round(stats.containment_rate, 6),
        "recovery_rate": round(stats.recovery_rate, 6),
        "successes": stats.successes,
        "detected_failures": stats.detected_failures,
        "silent_errors": stats.silent_errors,
        "out_of_guarantee": stats.out_of_guarantee,
        "theoretical_bound": (
            round(stats.bound_total / stats.bound_trials, 6) if stats.bound_trials else None
        ),
        "radius_fraction": str(Fraction(fraction)),
        "radius_symbols": radius,
        "guaranteed_errors": guaranteed,
        "errors": config.errors,
        "erasures": config.erasures,
        "dimension_histogram": {str(k): v for k, v in sorted(stats.dimension_histogram.items())},
        "seed": config.seed,
    }
