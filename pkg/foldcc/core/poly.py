"""
Univariate polynomials over F_q.

Polynomials are ``galois.Poly`` objects; this module adds the conversions the
codecs need (dense ascending coefficient vectors of a fixed width) and the
Lagrange machinery behind the LCC/FLCC encoders.
"""

from typing import Sequence, Union

import galois
import numpy as np

from foldcc.core.field import ElementLike, Fe, PrimeField, stack

Poly = galois.Poly


def _require_distinct(nodes: Fe, what: str = "nodes") -> None:
    if len(np.unique(np.asarray(nodes))) != len(nodes):
        raise ValueError(f"{what} must be pairwise distinct")


def poly_from_coeffs(field: PrimeField, coeffs: Union[Sequence[ElementLike], Fe]) -> Poly:
    """Build a polynomial from ascending coefficients (index i holds X^i).

    Trailing zero coefficients are allowed and do not change the polynomial.
    """
    values = field.array(coeffs) if not isinstance(coeffs, galois.FieldArray) else coeffs
    if values.size == 0:
        values = field.zeros(1)
    return galois.Poly(values, order="asc")


def coefficient_vector(p: Poly, k: int) -> Fe:
    """Return the k ascending coefficients of p, zero padded.

    Raises:
        ValueError: If deg(p) >= k
    """
    if p.degree >= k:
        raise ValueError(f"polynomial degree {p.degree} exceeds the bound k-1={k - 1}")
    return p.coefficients(size=k, order="asc")


def evaluate(p: Poly, x: Union[ElementLike, Fe]) -> Fe:
    """Evaluate p at x (scalar or array) by Horner's rule."""
    if not isinstance(x, galois.FieldArray):
        x = p.field(int(x) % p.field.order)
    return p(x)


def lagrange_monomial(j: int, nodes: Fe) -> Poly:
    """The j-th Lagrange basis polynomial on ``nodes`` (0-based j).

    l_j(nodes[j]) = 1 and l_j(nodes[i]) = 0 for i != j; its degree is
    len(nodes) - 1.

    Raises:
        ValueError: If the nodes repeat or j is out of range
    """
    _require_distinct(nodes)
    if not 0 <= j < len(nodes):
        raise ValueError(f"basis index {j} out of range for {len(nodes)} nodes")
    field = type(nodes)
    others = nodes[np.arange(len(nodes)) != j]
    if len(others) == 0:
        return galois.Poly(field([1]))
    scale = np.prod(nodes[j] - others) ** -1
    return galois.Poly.Roots(others) * galois.Poly(scale.reshape(1))


def lagrange_coefficients(nodes: Fe, points: Fe) -> Fe:
    """Matrix L with L[i, j] = l_j(points[i]) for the basis on ``nodes``.

    Multiplying L by the stacked values attached to the nodes evaluates the
    interpolating polynomial at every point at once.
    """
    _require_distinct(nodes)
    field = type(nodes)
    columns = [lagrange_monomial(j, nodes)(points) for j in range(len(nodes))]
    if not columns:
        return field.Zeros((len(points), 0))
    return stack(columns, axis=1)


def interpolate(points: Sequence[tuple[ElementLike, ElementLike]], field: PrimeField) -> Poly:
    """The unique polynomial of degree < len(points) through ``points``.

    Raises:
        ValueError: If two points share an x coordinate
    """
    if not points:
        raise ValueError("interpolation needs at least one point")
    xs = field.array([int(x) for x, _ in points])
    ys = field.array([int(y) for _, y in points])
    _require_distinct(xs, "interpolation x coordinates")
    if len(xs) == 1:
        return galois.Poly(ys)
    return galois.lagrange_poly(xs, ys)
