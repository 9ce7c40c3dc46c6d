"""
Subspace pruning with error-free side information.

The list decoder returns an affine subspace {M x + z} of candidate coefficient
vectors. Evaluating the true polynomial at a few extra points (side
information the master computes itself) gives the system

    (V M) x = values - V z

where V is the Vandermonde matrix on those points. When V M has full column
rank the system pins x, hence f, uniquely. Points are either chosen after the
decode so that V M is invertible, or drawn at random beforehand, in which case
a rank-deficient V M is reported instead of guessed.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

import numpy as np

from foldcc.codes.frs import DecodeResult, FrsParams
from foldcc.core.field import INT64_MAX, Fe, PrimeField
from foldcc.core.linalg import rref, solve_affine, vandermonde
from foldcc.core.poly import Poly, poly_from_coeffs
from foldcc.exceptions import InvariantViolation, SideInformationMismatch

logger = logging.getLogger(__name__)

SeedLike = Union[int, np.random.Generator, None]


@dataclass(frozen=True)
class SideInfoRequest:
    """Distinct nonzero points at which error-free evaluations are needed."""

    points: Fe

    def __post_init__(self) -> None:
        raw = np.asarray(self.points.view(np.ndarray))
        if np.any(raw == 0):
            raise ValueError("side-information points must be nonzero")
        if len(np.unique(raw)) != len(raw):
            raise ValueError("side-information points must be pairwise distinct")

    def __len__(self) -> int:
        return len(self.points)

    @classmethod
    def empty(cls, field_: PrimeField) -> "SideInfoRequest":
        return cls(points=field_.zeros(0))


class PruneStatus(str, Enum):
    UNIQUE = "unique"
    DETECTED_FAILURE = "detected_failure"


@dataclass(frozen=True)
class PruneOutcome:
    """Either the unique recovered coefficient vector or a detected failure."""

    status: PruneStatus
    coefficients: Optional[Fe] = None
    reason: str = field(default="")

    @property
    def is_unique(self) -> bool:
        return self.status == PruneStatus.UNIQUE

    def polynomial(self, field_: PrimeField) -> Poly:
        if self.coefficients is None:
            raise ValueError(f"no polynomial recovered: {self.reason}")
        return poly_from_coeffs(field_, self.coefficients)

    @classmethod
    def unique(cls, coefficients: Fe) -> "PruneOutcome":
        return cls(status=PruneStatus.UNIQUE, coefficients=coefficients)

    @classmethod
    def failure(cls, reason: str) -> "PruneOutcome":
        return cls(status=PruneStatus.DETECTED_FAILURE, reason=reason)


def select_points_deterministic(d: DecodeResult, p: FrsParams) -> SideInfoRequest:
    """Choose l points whose Vandermonde rows make V M invertible.

    The pool is gamma^0, gamma^1, ... capped at min(q-1, k+4l) nodes. Since the
    pool holds at least k distinct nodes its Vandermonde matrix has rank k, so
    the pool rows of V M span an l-dimensional space and the first l
    independent rows (in pool order) are returned.

    Raises:
        ValueError: If the decode produced no subspace or q-1 < k
    """
    if d.subspace is None:
        raise ValueError("decode produced no candidate subspace; nothing to prune")
    l = d.subspace.dimension
    if l == 0:
        return SideInfoRequest.empty(p.field)
    q = p.field.q
    if q - 1 < p.k:
        raise ValueError(f"q-1={q - 1} < k={p.k}: no rank-k Vandermonde pool exists")

    basis = d.subspace.normalized().basis
    pool = p.field.gamma_powers(0, min(q - 1, p.k + 4 * l))
    projected = vandermonde(pool, p.k) @ basis
    _, rows = rref(projected.T)
    if len(rows) < l:
        raise InvariantViolation(
            f"Vandermonde pool of {len(pool)} nodes spans only {len(rows)} of {l} directions"
        )
    return SideInfoRequest(points=pool[rows[:l]])


def select_points_random(t: int, rng_seed: SeedLike, field_: PrimeField) -> SideInfoRequest:
    """Draw t distinct points uniformly without replacement from F_q*.

    Raises:
        ValueError: If t < 0 or t > q-1
    """
    if not 0 <= t <= field_.q - 1:
        raise ValueError(f"cannot draw t={t} distinct nonzero points from F_{field_.q}")
    rng = np.random.default_rng(rng_seed)
    if field_.q <= INT64_MAX:
        draws = rng.choice(field_.q - 1, size=t, replace=False) + 1
        return SideInfoRequest(points=field_.array(draws))
    # F_q* is too large to index; redraw collisions, which are vanishingly rare.
    chosen: dict[int, None] = {}
    while len(chosen) < t:
        for x in field_.random_nonzero(rng, t - len(chosen)).tolist():
            chosen.setdefault(int(x))
    return SideInfoRequest(points=field_.array(list(chosen)))


def structured_points(s: int, rng_seed: SeedLike, field_: PrimeField) -> SideInfoRequest:
    """Draw a, a*gamma, ..., a*gamma^(s-1) for a uniform nonzero a.

    Raises:
        ValueError: If s < 1 or s > q-1
    """
    if not 1 <= s <= field_.q - 1:
        raise ValueError(f"structured point set of size s={s} does not fit in F_{field_.q}*")
    rng = np.random.default_rng(rng_seed)
    a = field_.random_nonzero(rng, 1)
    return SideInfoRequest(points=a * field_.gamma_powers(0, s))


def prune(d: DecodeResult, req: SideInfoRequest, values: Fe) -> PruneOutcome:
    """Recover the unique polynomial from the subspace and side information.

    Args:
        d: Decoder output
        req: Points at which the side information was evaluated
        values: values[i] = f(req.points[i]), error free

    Returns:
        PruneOutcome.unique with the coefficient vector when V M has full
        column rank; a detected failure when the subspace is missing or V M
        is rank deficient

    Raises:
        ValueError: If len(values) != len(req.points)
        SideInformationMismatch: If the side information contradicts every
            candidate in the subspace
    """
    if len(values) != len(req.points):
        raise ValueError(
            f"{len(values)} side-information values supplied for {len(req.points)} points"
        )
    if d.subspace is None:
        return PruneOutcome.failure("list decoder found the coefficient system inconsistent")

    subspace = d.subspace.normalized()
    k = len(subspace.particular)
    l = subspace.dimension
    V = vandermonde(req.points, k)
    residual = values - V @ subspace.particular

    if l == 0:
        if np.any(residual):
            raise SideInformationMismatch("side information disagrees with the decoded polynomial")
        return PruneOutcome.unique(subspace.particular.copy())

    solution = solve_affine(V @ subspace.basis, residual)
    if solution is None:
        raise SideInformationMismatch(
            f"no candidate in the {l}-dimensional subspace matches {len(req)} side values"
        )
    if solution.dimension > 0:
        logger.debug(f"V M has rank {l - solution.dimension} < {l}; pruning undetermined")
        return PruneOutcome.failure(
            f"side information left {solution.dimension} of {l} directions undetermined"
        )
    return PruneOutcome.unique(subspace.point(solution.particular))
