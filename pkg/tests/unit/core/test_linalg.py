"""
Unit tests for linear algebra over F_q.
"""

import numpy as np
import pytest

from foldcc.core.linalg import AffineSolution, null_space, rank, rref, solve_affine, vandermonde


@pytest.mark.unit
class TestRref:
    """Test reduced row echelon form."""

    def test_identity(self, f17):
        """Test the identity is its own RREF with every column a pivot."""
        I = f17.gf.Identity(4)
        R, pivots = rref(I)
        assert np.array_equal(R, I)
        assert pivots == [0, 1, 2, 3]

    def test_zero_matrix(self, f17):
        """Test the zero matrix has no pivots."""
        R, pivots = rref(f17.zeros((3, 4)))
        assert pivots == []
        assert not np.any(R)

    def test_dependent_rows(self, f17):
        """Test [[1,2],[2,4]] has rank 1."""
        assert rank(f17.array([[1, 2], [2, 4]])) == 1

    def test_empty_shapes(self, f17):
        """Test zero-row and zero-column matrices are handled."""
        assert rref(f17.zeros((0, 3)))[1] == []
        assert rref(f17.zeros((3, 0)))[1] == []

    def test_rank_is_preserved(self, f257, rng):
        """Test rank(A) = rank(rref(A)) on random low-rank products."""
        for _ in range(20):
            r = int(rng.integers(1, 5))
            A = f257.random(rng, (6, r)) @ f257.random(rng, (r, 7))
            R, pivots = rref(A)
            assert len(pivots) == rank(R) <= r


@pytest.mark.unit
class TestSolveAffine:
    """Test affine solution spaces."""

    def test_identity_system(self, f17):
        """Test A = I gives particular = b and an empty basis."""
        b = f17.array([3, 5, 7])
        solution = solve_affine(f17.gf.Identity(3), b)
        assert np.array_equal(solution.particular, b)
        assert solution.dimension == 0

    def test_zero_system_is_whole_space(self, f17):
        """Test A = 0, b = 0 gives basis = I."""
        solution = solve_affine(f17.zeros((2, 3)), f17.zeros(2))
        assert np.array_equal(solution.basis, f17.gf.Identity(3))
        assert solution.free_rows == (0, 1, 2)

    def test_single_equation(self, f17):
        """Test x + y = 3 gives particular [3, 0] and basis [-1, 1]."""
        A = f17.array([[1, 1]])
        b = f17.array([3])
        solution = solve_affine(A, b)
        assert solution.particular.tolist() == [3, 0]
        assert solution.basis.tolist() == [[16], [1]]
        for x in range(17):
            point = solution.point(f17.array([x]))
            assert np.array_equal(A @ point, b)

    def test_inconsistent_returns_none(self, f17):
        """Test an inconsistent system is reported, not raised."""
        A = f17.array([[1, 1], [1, 1]])
        assert solve_affine(A, f17.array([1, 2])) is None

    def test_random_parametrizations_satisfy_system(self, f257, rng):
        """Test every sampled x gives an exact solution and free rows carry I."""
        for _ in range(30):
            r = int(rng.integers(1, 5))
            A = f257.random(rng, (5, r)) @ f257.random(rng, (r, 8))
            b = A @ f257.random(rng, 8)
            solution = solve_affine(A, b)
            assert solution is not None
            assert solution.dimension == 8 - rank(A)
            free = list(solution.free_rows)
            assert np.array_equal(solution.basis[free, :], f257.gf.Identity(len(free)))
            for _ in range(3):
                x = f257.random(rng, solution.dimension)
                assert np.array_equal(A @ solution.point(x), b)

    def test_contains(self, f17):
        """Test membership of points in and out of the solution space."""
        solution = solve_affine(f17.array([[1, 1]]), f17.array([3]))
        assert solution.contains(f17.array([1, 2]))
        assert not solution.contains(f17.array([1, 1]))

    def test_normalized_keeps_span(self, f257, rng):
        """Test re-normalization puts I on free rows and keeps the same set."""
        basis = f257.random(rng, (6, 2))
        particular = f257.random(rng, 6)
        original = AffineSolution(particular=particular, basis=basis, free_rows=(0, 1))
        normalized = original.normalized()
        rows = list(normalized.free_rows)
        assert np.array_equal(normalized.basis[rows, :], f257.gf.Identity(2))
        for _ in range(5):
            assert normalized.contains(original.point(f257.random(rng, 2)))


@pytest.mark.unit
class TestNullSpace:
    """Test null spaces."""

    def test_full_column_rank(self, f17):
        """Test a full-column-rank matrix has a zero-width null space."""
        assert null_space(f17.gf.Identity(3)).shape == (3, 0)

    def test_zero_matrix(self, f17):
        """Test the null space of the k x k zero matrix is I."""
        assert np.array_equal(null_space(f17.zeros((3, 3))), f17.gf.Identity(3))

    def test_single_row(self, f17):
        """Test [[1, 2]] has null space spanned by (-2, 1)."""
        N = null_space(f17.array([[1, 2]]))
        assert N.tolist() == [[15], [1]]

    def test_columns_annihilated_and_independent(self, f257, rng):
        """Test A N = 0 and rank(N) = cols - rank(A)."""
        A = f257.random(rng, (4, 3)) @ f257.random(rng, (3, 9))
        N = null_space(A)
        assert N.shape[1] == 9 - rank(A)
        assert not np.any(A @ N)
        assert rank(N) == N.shape[1]


@pytest.mark.unit
class TestVandermonde:
    """Test Vandermonde construction."""

    def test_width_one(self, f17):
        """Test k = 1 gives a column of ones."""
        assert vandermonde(f17.array([2, 5, 7]), 1).tolist() == [[1], [1], [1]]

    def test_small_example(self, f17):
        """Test nodes [1, 2], k = 3."""
        assert vandermonde(f17.array([1, 2]), 3).tolist() == [[1, 1, 1], [1, 2, 4]]

    def test_width_zero(self, f17):
        """Test k = 0 gives an empty matrix with one row per node."""
        assert vandermonde(f17.array([1, 2]), 0).shape == (2, 0)

    def test_rank_is_min_of_nodes_and_width(self, f257):
        """Test d distinct nodes and width k give rank min(d, k)."""
        for d in range(1, 7):
            for k in range(1, 7):
                assert rank(vandermonde(f257.gamma_powers(0, d), k)) == min(d, k)
