"""
Dense linear algebra over F_q.

Matrices are two-dimensional ``galois`` field arrays (row-major). The routines
here are the elimination backbone of the list decoder and of subspace pruning:
reduced row echelon form, affine solution spaces with a recorded identity
submatrix, null spaces and Vandermonde matrices.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from foldcc.core.field import Fe

logger = logging.getLogger(__name__)

MatFq = Fe


@dataclass(frozen=True)
class AffineSolution:
    """Parametrization {particular + basis @ x} of a linear system's solutions.

    ``basis`` restricted to ``free_rows`` is the identity, so the free
    coordinates of a solution are exactly the parameters x.
    """

    particular: Fe
    basis: MatFq
    free_rows: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return int(self.basis.shape[1])

    @property
    def field(self) -> type[Fe]:
        return type(self.particular)

    def point(self, x: Fe) -> Fe:
        """The solution with parameters x."""
        if self.dimension == 0:
            return self.particular.copy()
        return self.particular + self.basis @ x

    def contains(self, vector: Fe) -> bool:
        """Whether ``vector`` is one of the parametrized solutions."""
        offset = vector - self.particular
        if self.dimension == 0:
            return not np.any(offset)
        return solve_affine(self.basis, offset) is not None

    def normalized(self) -> "AffineSolution":
        """Re-express the subspace so an identity block sits on ``free_rows``.

        The rows are chosen as the pivots of the transposed basis, which for
        output of :func:`solve_affine` reproduces the stored free rows.
        """
        if self.dimension == 0:
            return self
        _, rows = rref(self.basis.T)
        block = self.basis[rows, :]
        basis = self.basis @ np.linalg.inv(block)
        particular = self.particular - basis @ self.particular[rows]
        return AffineSolution(particular=particular, basis=basis, free_rows=tuple(rows))


def rref(A: MatFq) -> tuple[MatFq, list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivots are chosen column by column, taking the first row (top to bottom)
    with a nonzero entry, so the output is deterministic.

    Returns:
        Tuple of (R, pivots) where rank(A) = len(pivots)
    """
    rows, cols = A.shape
    if rows == 0 or cols == 0:
        return A.copy(), []
    R = A.row_reduce()
    pivots = []
    for row in R.view(np.ndarray):
        nonzero = np.flatnonzero(row)
        if nonzero.size == 0:
            break
        pivots.append(int(nonzero[0]))
    return R, pivots


def rank(A: MatFq) -> int:
    return len(rref(A)[1])


def solve_affine(A: MatFq, b: Fe) -> Optional[AffineSolution]:
    """Parametrize every solution of A x = b.

    Args:
        A: Coefficient matrix (rows x cols)
        b: Right-hand side of length rows

    Returns:
        The affine solution space, or None if the system is inconsistent
    """
    field = type(A)
    rows, cols = A.shape
    augmented = np.concatenate((A, b.reshape(rows, 1)), axis=1)
    R, pivots = rref(augmented)
    if cols in pivots:
        return None

    particular = field.Zeros(cols)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = field.Zeros((cols, len(free)))
    if pivots:
        particular[pivots] = R[: len(pivots), cols]
        if free:
            basis[pivots, :] = -R[: len(pivots)][:, free]
    if free:
        basis[free, np.arange(len(free))] = 1
    return AffineSolution(particular=particular, basis=basis, free_rows=tuple(free))


def null_space(A: MatFq) -> MatFq:
    """Columns spanning {v : A v = 0}; there are cols - rank(A) of them."""
    field = type(A)
    solution = solve_affine(A, field.Zeros(A.shape[0]))
    assert solution is not None  # homogeneous systems are always consistent
    return solution.basis


def vandermonde(nodes: Fe, k: int) -> MatFq:
    """Rows (1, x, x^2, ..., x^(k-1)) for each node x."""
    field = type(nodes)
    if k == 0:
        return field.Zeros((len(nodes), 0))
    return nodes.reshape(-1, 1) ** np.arange(k, dtype=np.int64)
