"""
Element-wise FLCC master decoding.

Each entry (a, b) of the output matrices is an independent FRS decoding
problem: the received word stacks entry (a, b) of the m results of every
worker, stragglers are erasures, and the code has k = composed degree + 1.
Side information f_m(lambda) = g(u_m(lambda)) is a full output matrix, so one
evaluation serves every entry that asks for the point lambda.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Literal, Optional, Sequence

import numpy as np
from joblib import Parallel, delayed
from pydantic import BaseModel, ConfigDict, model_validator

from foldcc.codes.frs import DecodeResult, FrsCodeword, FrsParams, list_decode
from foldcc.codes.pruning import (
    PruneOutcome,
    SideInfoRequest,
    prune,
    select_points_deterministic,
    select_points_random,
    structured_points,
)
from foldcc.core.field import Fe
from foldcc.core.linalg import vandermonde
from foldcc.exceptions import SideInformationMismatch
from foldcc.protocol.encoding import FlccEncoding, WorkerReturn
from foldcc.protocol.jobs import PolynomialJob
from foldcc.protocol.params import FlccParams

logger = logging.getLogger(__name__)

SideInfoKind = Literal["deterministic", "probabilistic", "structured"]


class DecodeMode(BaseModel):
    """How the master obtains side information.

    ``deterministic`` picks points after decoding so pruning always succeeds;
    ``probabilistic`` draws t uniform points from ``seed`` before any result
    arrives; ``structured`` draws the geometric set a, a*gamma, ..., a*gamma^(t-1)
    for a uniform nonzero a instead.
    """

    model_config = ConfigDict(frozen=True)

    kind: SideInfoKind = "deterministic"
    t: int = 0
    seed: Optional[int] = None

    @model_validator(mode="after")
    def _validate_mode(self) -> "DecodeMode":
        if self.predrawn and self.t < 1:
            raise ValueError(f"{self.kind} mode needs t >= 1 side-information points, got {self.t}")
        return self

    @property
    def predrawn(self) -> bool:
        """Whether the points are drawn before decoding rather than chosen after."""
        return self.kind != "deterministic"

    @classmethod
    def deterministic(cls) -> "DecodeMode":
        return cls(kind="deterministic")

    @classmethod
    def probabilistic(cls, t: int, seed: Optional[int] = None) -> "DecodeMode":
        return cls(kind="probabilistic", t=t, seed=seed)

    @classmethod
    def structured(cls, t: int, seed: Optional[int] = None) -> "DecodeMode":
        return cls(kind="structured", t=t, seed=seed)


class DecodeStatus(str, Enum):
    SUCCESS = "success"
    DETECTED_FAILURE = "detected_failure"


@dataclass(frozen=True)
class MasterDecodeResult:
    """Outcome of :func:`master_decode`.

    ``outputs`` holds g(X_1) .. g(X_mK) stacked on axis 0 and is None on
    failure. ``entry_dimensions`` records the candidate subspace dimension of
    every output entry in row-major order (-1 where the decoder found none).
    """

    status: DecodeStatus
    outputs: Optional[Fe]
    entry_dimensions: list[int]
    side_info_points: int
    flagged_entries: list[tuple[int, int]] = field(default_factory=list)
    reason: str = ""

    @property
    def succeeded(self) -> bool:
        return self.status == DecodeStatus.SUCCESS

    @property
    def max_dimension(self) -> int:
        return max(self.entry_dimensions, default=0)


def _received_words(
    returns: Sequence[WorkerReturn], params: FlccParams
) -> tuple[Fe, np.ndarray]:
    """Stack worker results as (N, m, r', h') with an erasure mask over workers."""
    by_worker = {ret.worker: ret for ret in returns}
    if len(by_worker) != len(returns):
        raise ValueError("duplicate worker indices in returns")
    unknown = set(by_worker) - set(range(params.N))
    if unknown:
        raise ValueError(f"returns from unknown workers {sorted(unknown)}")
    responders = [ret for ret in returns if not ret.is_straggler]
    if not responders:
        raise ValueError("no worker responded")
    out_shape = responders[0].results.shape  # type: ignore[union-attr]
    if out_shape[0] != params.m:
        raise ValueError(f"workers must return m={params.m} results, got {out_shape[0]}")

    received = params.field.zeros((params.N, *out_shape))
    erased = np.ones(params.N, dtype=bool)
    for ret in responders:
        if ret.results.shape != out_shape:  # type: ignore[union-attr]
            raise ValueError(f"worker {ret.worker} returned shape {ret.results.shape}")  # type: ignore[union-attr]
        received[ret.worker] = ret.results
        erased[ret.worker] = False
    return received, erased


def _side_information(job: PolynomialJob, encoding: FlccEncoding, points: Fe) -> Fe:
    """f_m at each point: the job applied to u_m(lambda), stacked on axis 0."""
    if len(points) == 0:
        return encoding.params.field.zeros((0,))
    return job.apply_all(encoding.evaluate(points))


def _entry_values(side: Fe, lookup: dict[int, int], points: Fe, a: int, b: int) -> Fe:
    rows = [lookup[int(p)] for p in points]
    return side[rows, a, b] if rows else side.flatten()[:0]


def _prune_entry(decoded: DecodeResult, request: SideInfoRequest, values: Fe) -> PruneOutcome:
    try:
        return prune(decoded, request, values)
    except SideInformationMismatch as exc:
        return PruneOutcome.failure(str(exc))


def _consistent(
    coefficients: Fe, word: FrsCodeword, fp: FrsParams, claimed_adversaries: int
) -> bool:
    encoded = (vandermonde(fp.field.gamma_powers(0, fp.n), fp.k) @ coefficients).reshape(
        fp.N, fp.m
    )
    agree = int(np.count_nonzero(np.all(encoded == word.symbols, axis=1) & ~word.erased))
    return agree >= fp.N - word.erasures - claimed_adversaries


def master_decode(
    returns: Sequence[WorkerReturn],
    params: FlccParams,
    job: PolynomialJob,
    mode: DecodeMode,
    encoding: FlccEncoding,
    consistency_check: bool = False,
    n_jobs: Optional[int] = None,
) -> MasterDecodeResult:
    """Recover g(X_1) .. g(X_mK) from worker returns.

    Args:
        returns: One WorkerReturn per worker; missing workers count as stragglers
        params: Protocol parameters; s* and k come from here
        job: The computed polynomial job
        mode: Side-information strategy
        encoding: The master's own encoding, used to evaluate u_m at
            side-information points
        consistency_check: Flag entries whose recovered polynomial agrees
            with fewer than N - stragglers - params.A returned symbols
        n_jobs: joblib worker count for the per-entry decodes

    Returns:
        MasterDecodeResult; any entry failing makes the whole decode a
        detected failure with no outputs

    Raises:
        ValueError: On malformed returns or if erasures leave D < 0
    """
    received, erased = _received_words(returns, params)
    fp = params.frs_params()
    s = params.s_star
    entries = [(a, b) for a in range(received.shape[2]) for b in range(received.shape[3])]
    words = [FrsCodeword(symbols=received[:, :, a, b], erased=erased) for a, b in entries]
    logger.debug(
        f"Decoding {len(entries)} entries with s={s}, k={fp.k}, "
        f"{int(erased.sum())} stragglers, mode={mode.kind}"
    )

    decoded: list[DecodeResult] = Parallel(n_jobs=n_jobs, prefer="threads")(
        delayed(list_decode)(word, s, fp) for word in words
    )
    dimensions = [-1 if d.dimension is None else d.dimension for d in decoded]

    if mode.predrawn:
        draw = structured_points if mode.kind == "structured" else select_points_random
        shared = draw(mode.t, mode.seed, params.field)
        requests = [shared for _ in decoded]
        points = shared.points
    else:
        requests = [
            SideInfoRequest.empty(params.field)
            if d.subspace is None
            else select_points_deterministic(d, fp)
            for d in decoded
        ]
        unique: dict[int, None] = {}
        for request in requests:
            unique.update((int(p), None) for p in request.points)
        points = params.field.array(list(unique))

    side = _side_information(job, encoding, points)
    lookup = {int(p): row for row, p in enumerate(points)}
    logger.debug(f"Evaluated side information at {len(points)} points")

    outcomes = [
        _prune_entry(d, req, _entry_values(side, lookup, req.points, a, b))
        for d, req, (a, b) in zip(decoded, requests, entries)
    ]
    failed = [(entry, o.reason) for entry, o in zip(entries, outcomes) if not o.is_unique]
    if failed:
        (a, b), reason = failed[0]
        logger.debug(f"{len(failed)} entries failed to prune; first ({a},{b}): {reason}")
        return MasterDecodeResult(
            status=DecodeStatus.DETECTED_FAILURE,
            outputs=None,
            entry_dimensions=dimensions,
            side_info_points=len(points),
            reason=f"entry ({a},{b}): {reason}",
        )

    coefficients = [o.coefficients for o in outcomes]
    if consistency_check:
        flagged = [
            entry
            for entry, c, word in zip(entries, coefficients, words)
            if not _consistent(c, word, fp, params.A)  # type: ignore[arg-type]
        ]
        if flagged:
            logger.warning(f"Consistency check flagged {len(flagged)} entries")
            return MasterDecodeResult(
                status=DecodeStatus.DETECTED_FAILURE,
                outputs=None,
                entry_dimensions=dimensions,
                side_info_points=len(points),
                flagged_entries=flagged,
                reason="recovered polynomials disagree with too many returned symbols",
            )

    out_shape = received.shape[2:]
    coeff_matrix = params.field.zeros((fp.k, len(entries)))
    for column, c in enumerate(coefficients):
        coeff_matrix[:, column] = c
    outputs = (vandermonde(params.output_points(), fp.k) @ coeff_matrix).reshape(
        params.outputs, *out_shape
    )
    return MasterDecodeResult(
        status=DecodeStatus.SUCCESS,
        outputs=outputs,
        entry_dimensions=dimensions,
        side_info_points=len(points),
    )
