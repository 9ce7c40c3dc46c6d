"""
FLCC encoding and honest worker computation.

The mK data matrices and mT uniformly random masks are attached to the
interpolation points; u_m is the entry-wise Lagrange interpolant through
them and worker i receives u_m at its m evaluation points.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from foldcc.core.field import Fe
from foldcc.core.poly import lagrange_coefficients
from foldcc.protocol.jobs import PolynomialJob
from foldcc.protocol.params import FlccParams, MatrixDataset

logger = logging.getLogger(__name__)


def _interpolant_at(params: FlccParams, values: Fe, points: Fe) -> Fe:
    coefficients = lagrange_coefficients(params.interpolation_points(), points)
    flat = values.reshape(values.shape[0], -1)
    return (coefficients @ flat).reshape(len(points), *values.shape[1:])


@dataclass(frozen=True)
class FlccEncoding:
    """An encoded batch: the values behind u_m and the per-worker shares.

    ``values`` has shape (m(K+T), r, h), data first then masks. ``shares``
    has shape (N, m, r, h).
    """

    params: FlccParams
    values: Fe
    shares: Fe
    mask_seed: Optional[int] = None

    @property
    def data(self) -> Fe:
        return self.values[: self.params.outputs]

    def evaluate(self, points: Fe) -> Fe:
        """u_m at each point, stacked as (len(points), r, h)."""
        return _interpolant_at(self.params, self.values, points)

    def share(self, worker: int) -> Fe:
        return self.shares[worker]


def flcc_encode(
    data: Union[MatrixDataset, Fe], params: FlccParams, rng_seed: Optional[int] = None
) -> FlccEncoding:
    """Encode mK matrices into N folded shares with mT random masks.

    Args:
        data: mK input matrices, stacked on axis 0
        params: Protocol parameters
        rng_seed: Seed of the mask generator; masks are uniform over F_q

    Returns:
        The encoding, including shares for every worker

    Raises:
        ValueError: If the batch size is not mK
    """
    inputs = data.inputs if isinstance(data, MatrixDataset) else data
    if inputs.ndim != 3 or inputs.shape[0] != params.outputs:
        raise ValueError(
            f"expected {params.outputs} stacked input matrices, got shape {inputs.shape}"
        )
    inputs = params.field.array(inputs)

    rng = np.random.default_rng(rng_seed)
    masks = params.field.random(rng, (params.m * params.T, *inputs.shape[1:]))
    logger.debug(f"Encoding {params.outputs} inputs with {len(masks)} masks (seed={rng_seed})")
    values = np.concatenate((inputs, masks), axis=0)

    shares = _interpolant_at(params, values, params.evaluation_points()).reshape(
        params.N, params.m, *inputs.shape[1:]
    )
    return FlccEncoding(params=params, values=values, shares=shares, mask_seed=rng_seed)


@dataclass(frozen=True)
class WorkerReturn:
    """What the master receives from one worker; ``results`` is None for a straggler.

    Honest results have shape (m, r', h').
    """

    worker: int
    results: Optional[Fe]

    @property
    def is_straggler(self) -> bool:
        return self.results is None

    @classmethod
    def straggler(cls, worker: int) -> "WorkerReturn":
        return cls(worker=worker, results=None)


def worker_compute(worker: int, share: Fe, job: PolynomialJob) -> WorkerReturn:
    """Apply the job to each of the worker's m share matrices."""
    return WorkerReturn(worker=worker, results=job.apply_all(share))
