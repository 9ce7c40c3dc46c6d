"""
Polynomial jobs a worker can be asked to compute.

A job maps an r x h matrix to an r' x h' matrix such that every output entry
is a polynomial of total degree at most ``declared_degree`` in the input
entries. The registry holds the jobs the CLI and simulator know by name.
"""

import logging
from dataclasses import dataclass, replace
from typing import Callable, Optional

import numpy as np

from foldcc.core.field import Fe, PrimeField, stack
from foldcc.protocol.params import MatrixDataset

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolynomialJob:
    name: str
    evaluator: Callable[[Fe], Fe]
    declared_degree: int
    description: str = ""

    def __call__(self, X: Fe) -> Fe:
        return self.evaluator(X)

    def apply_all(self, matrices: Fe) -> Fe:
        """Apply the job to each matrix stacked on axis 0."""
        return stack([self.evaluator(X) for X in matrices])

    def evaluate(self, data: MatrixDataset) -> MatrixDataset:
        """The dataset with its outputs set to this job applied to every input."""
        return replace(data, outputs=self.apply_all(data.inputs))


JOBS: dict[str, PolynomialJob] = {
    "identity": PolynomialJob("identity", lambda X: X.copy(), 1, "X -> X"),
    "square": PolynomialJob("square", lambda X: X * X, 2, "entry-wise square"),
    "gram": PolynomialJob("gram", lambda X: X.T @ X, 2, "X -> X^T X"),
    "cube": PolynomialJob("cube", lambda X: X * X * X, 3, "entry-wise cube"),
}


def get_job(name: str) -> PolynomialJob:
    """Look up a registered job.

    Raises:
        ValueError: If no job of that name exists
    """
    try:
        return JOBS[name]
    except KeyError:
        raise ValueError(f"unknown job {name!r}; available: {', '.join(sorted(JOBS))}") from None


def degree_probe(
    job: PolynomialJob,
    field: PrimeField,
    shape: tuple[int, int],
    seed: int = 0,
    lines: int = 3,
    max_degree: Optional[int] = None,
) -> int:
    """Estimate a job's total degree by finite differences along random lines.

    Along the line X(t) = A + t B every output entry is a univariate
    polynomial in t of degree at most the job's degree, so its (d+1)-th
    forward difference over t = 0, 1, ... vanishes. Returns the largest degree
    seen over ``lines`` random lines, or max_degree + 1 if some line exceeds
    ``max_degree`` (default declared_degree + 1).
    """
    bound = job.declared_degree + 1 if max_degree is None else max_degree
    if bound + 2 > field.q:
        raise ValueError(f"F_{field.q} has too few points to probe degree {bound}")
    rng = np.random.default_rng(seed)
    observed = 0
    for _ in range(lines):
        A = field.random(rng, shape)
        B = field.random(rng, shape)
        diffs = stack([job(A + field.element(t) * B) for t in range(bound + 2)])
        degree = bound + 1
        for order in range(1, bound + 2):
            diffs = diffs[1:] - diffs[:-1]
            if not np.any(diffs):
                degree = order - 1
                break
        observed = max(observed, degree)
    logger.debug(f"Job {job.name} probed at degree {observed} (declared {job.declared_degree})")
    return observed
