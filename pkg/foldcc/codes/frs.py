"""
Folded Reed-Solomon encoding and linear-algebraic list decoding.

A degree < k polynomial f is evaluated at 1, gamma, ..., gamma^(n-1) and the
n values are bundled into N = n/m symbols of m consecutive evaluations. The
decoder interpolates a linear multivariate polynomial

    Q(X, Y_1, ..., Y_s) = A_0(X) + A_1(X) Y_1 + ... + A_s(X) Y_s

through the non-erased symbols and returns the affine space of coefficient
vectors f satisfying Q(X, f(X), f(gamma X), ..., f(gamma^(s-1) X)) = 0. Every
polynomial whose encoding agrees with enough non-erased symbols lies in it.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from foldcc.core.field import Fe, PrimeField
from foldcc.core.linalg import AffineSolution, null_space, solve_affine, vandermonde
from foldcc.core.poly import Poly, coefficient_vector, poly_from_coeffs
from foldcc.exceptions import InvariantViolation

logger = logging.getLogger(__name__)


class FrsParams(BaseModel):
    """Folding geometry of an m-folded RS code FRS_q^(m)[n, k]."""

    model_config = ConfigDict(frozen=True)

    field: PrimeField
    n: int
    m: int
    k: int

    @model_validator(mode="after")
    def _validate_geometry(self) -> "FrsParams":
        if self.m < 1:
            raise ValueError(f"folding parameter m={self.m} must be >= 1")
        if self.n % self.m != 0:
            raise ValueError(f"n={self.n} must be a multiple of m={self.m}")
        if self.n > self.field.q - 1:
            raise ValueError(f"n={self.n} exceeds q-1={self.field.q - 1} evaluation points")
        if not 1 <= self.k < self.n:
            raise ValueError(f"degree bound k={self.k} must satisfy 1 <= k < n={self.n}")
        return self

    @property
    def N(self) -> int:
        """Block length in symbols."""
        return self.n // self.m

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)

    def symbol_points(self) -> Fe:
        """Evaluation points arranged as (N, m): row j holds gamma^(jm) .. gamma^(jm+m-1)."""
        return self.field.gamma_powers(0, self.n).reshape(self.N, self.m)


@dataclass(frozen=True)
class FrsCodeword:
    """N symbols of m field elements each, with per-symbol erasure flags."""

    symbols: Fe
    erased: np.ndarray

    @property
    def erasures(self) -> int:
        return int(np.count_nonzero(self.erased))

    def with_erasures(self, positions: Union[list[int], np.ndarray]) -> "FrsCodeword":
        """Copy of this word with the given symbols marked erased."""
        erased = self.erased.copy()
        erased[np.asarray(positions, dtype=np.int64)] = True
        return FrsCodeword(symbols=self.symbols.copy(), erased=erased)


@dataclass(frozen=True)
class DecodeResult:
    """Output of :func:`list_decode`.

    ``subspace`` is None when no coefficient vector satisfies the decoding
    identity, which can only happen outside the decoding radius.
    """

    subspace: Optional[AffineSolution]
    s_used: int
    degree_parameter: int
    erasures: int

    @property
    def dimension(self) -> Optional[int]:
        return None if self.subspace is None else self.subspace.dimension


def _check_order(p: FrsParams, s: int) -> None:
    if not 1 <= s <= p.m:
        raise ValueError(f"interpolation order s={s} must satisfy 1 <= s <= m={p.m}")


def frs_encode(f: Union[Poly, Fe], p: FrsParams) -> FrsCodeword:
    """Encode a polynomial (or its ascending coefficient vector) of degree < k.

    Raises:
        ValueError: If deg(f) >= k
    """
    if not isinstance(f, Poly):
        f = poly_from_coeffs(p.field, f)
    coefficient_vector(f, p.k)
    symbols = f(p.symbol_points())
    return FrsCodeword(symbols=symbols, erased=np.zeros(p.N, dtype=bool))


def agreement(y: FrsCodeword, f: Union[Poly, Fe], p: FrsParams) -> int:
    """Number of non-erased symbols of y equal to the encoding of f."""
    encoded = frs_encode(f, p).symbols
    matches = np.all(encoded == y.symbols, axis=1) & ~y.erased
    return int(np.count_nonzero(matches))


def decoding_radius(p: FrsParams, s: int, erasures: int = 0) -> tuple[Fraction, int]:
    """Fraction (s/(s+1))(1 - mR/(m-s+1)) and the symbol count it allows.

    Returns:
        Tuple of (fraction, floor(fraction * (N - erasures))); the count is
        clamped at zero when the fraction is negative
    """
    _check_order(p, s)
    fraction = Fraction(s, s + 1) * (1 - p.m * p.rate / (p.m - s + 1))
    count = math.floor(fraction * (p.N - erasures))
    return fraction, max(0, count)


def interpolation_degree(p: FrsParams, s: int, erasures: int = 0) -> int:
    """Degree parameter D = floor(((N-S)(m-s+1) - k + 1) / (s+1))."""
    _check_order(p, s)
    return ((p.N - erasures) * (p.m - s + 1) - p.k + 1) // (s + 1)


def max_correctable_errors(p: FrsParams, s: int, erasures: int = 0) -> int:
    """Errors the interpolation argument tolerates among non-erased symbols.

    A polynomial is captured when its agreement t exceeds (D+k-1)/(m-s+1).
    """
    D = interpolation_degree(p, s, erasures)
    if D < 0:
        return 0
    required = (D + p.k - 1) // (p.m - s + 1) + 1
    return max(0, p.N - erasures - required)


def guaranteed_errors(p: FrsParams, s: int, erasures: int = 0) -> int:
    """Error count under which containment is certified."""
    return min(decoding_radius(p, s, erasures)[1], max_correctable_errors(p, s, erasures))


def _interpolation_system(y: FrsCodeword, s: int, D: int, p: FrsParams) -> Fe:
    """Homogeneous system whose kernel holds the coefficients of Q.

    Unknowns are ordered A_0 (D+k coefficients) then A_1 .. A_s (D+1 each).
    One row per non-erased symbol i and shift j in 0..m-s.
    """
    kept = np.flatnonzero(~y.erased)
    shifts = p.m - s + 1
    symbol_idx = np.repeat(kept, shifts)
    shift_idx = np.tile(np.arange(shifts), len(kept))
    xs = p.symbol_points()[symbol_idx, shift_idx]

    blocks = [vandermonde(xs, D + p.k)]
    powers = vandermonde(xs, D + 1)
    for t in range(s):
        window = y.symbols[symbol_idx, shift_idx + t]
        blocks.append(powers * window.reshape(-1, 1))
    return np.concatenate(blocks, axis=1)


def _coefficient_system(q_coeffs: Fe, s: int, D: int, p: FrsParams) -> tuple[Fe, Fe]:
    """Linear system in f from A_0(X) + sum_i A_i(X) f(gamma^(i-1) X) = 0.

    Row d is the coefficient of X^d, d in 0..D+k-1.
    """
    gf = p.field.gf
    a0 = q_coeffs[: D + p.k]
    a_rest = q_coeffs[D + p.k :].reshape(s, D + 1)

    offsets = np.arange(D + p.k)[:, None] - np.arange(p.k)[None, :]
    inside = (offsets >= 0) & (offsets <= D)
    gathered = a_rest[:, np.clip(offsets, 0, D)]
    twists = vandermonde(p.field.gamma_powers(0, s), p.k)
    B = np.sum(gathered * twists[:, None, :], axis=0) * gf(inside.astype(np.int64))
    return B, -a0


def list_decode(y: FrsCodeword, s: int, p: FrsParams) -> DecodeResult:
    """List decode an FRS received word with known erasures.

    Args:
        y: Received word; erased symbols are ignored
        s: Interpolation order, 1 <= s <= m
        p: Code parameters

    Returns:
        DecodeResult whose subspace contains every degree < k polynomial that
        differs from y in at most the decoding radius of non-erased symbols

    Raises:
        ValueError: If s is out of range or D < 0
        InvariantViolation: If the interpolation system has no usable solution
    """
    _check_order(p, s)
    erasures = y.erasures
    D = interpolation_degree(p, s, erasures)
    if D < 0:
        raise ValueError(
            f"degree parameter D={D} < 0: {p.N - erasures} non-erased symbols cannot "
            f"support k={p.k} with s={s}, m={p.m}"
        )

    system = _interpolation_system(y, s, D, p)
    kernel = null_space(system)
    logger.debug(
        f"Interpolation system {system.shape[0]}x{system.shape[1]}, D={D}, "
        f"kernel dimension {kernel.shape[1]}"
    )
    q_coeffs = None
    for column in range(kernel.shape[1]):
        if np.any(kernel[D + p.k :, column]):
            q_coeffs = kernel[:, column]
            break
    if q_coeffs is None:
        raise InvariantViolation(
            f"interpolation kernel has no solution with a nonzero Y part (D={D}, s={s})"
        )

    B, rhs = _coefficient_system(q_coeffs, s, D, p)
    subspace = solve_affine(B, rhs)
    if subspace is None:
        logger.debug("Coefficient system inconsistent; received word is outside the radius")
    else:
        logger.debug(f"Candidate subspace dimension {subspace.dimension}")
    return DecodeResult(subspace=subspace, s_used=s, degree_parameter=D, erasures=erasures)
