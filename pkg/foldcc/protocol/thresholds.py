"""
Adversary thresholds for LCC and FLCC.

Everything is exact rational arithmetic. The only float in the module is the
square root inside the closed-form candidate for the optimal interpolation
order, and that value only selects which two integers get evaluated exactly.
"""

import logging
import math
from fractions import Fraction
from typing import Union

logger = logging.getLogger(__name__)

RationalLike = Union[int, float, str, Fraction]


def _check_lcc(N: int, K: int, T: int, S: int, D2: int) -> None:
    minimum = (K + T - 1) * D2 + S + 1
    if N < minimum:
        raise ValueError(f"N={N} workers < (K+T-1)*D2 + S + 1 = {minimum}")


def lcc_threshold(N: int, K: int, T: int, S: int, D2: int) -> int:
    """Largest A with N >= (K+T-1) D2 + S + 2A + 1.

    Raises:
        ValueError: If N < (K+T-1) D2 + S + 1
    """
    _check_lcc(N, K, T, S, D2)
    return (N - (K + T - 1) * D2 - S - 1) // 2


def lcc_min_workers(K: int, T: int, S: int, A: int, D2: int) -> int:
    return (K + T - 1) * D2 + S + 2 * A + 1


def modified_rate(N: int, K: int, T: int, S: int, D2: int, m: int) -> Fraction:
    """r = ((K + T - 1/m) D2 + 1) / (N - S).

    Raises:
        ValueError: If N <= S or m < 1
    """
    if N <= S:
        raise ValueError(f"N={N} must exceed the straggler count S={S}")
    if m < 1:
        raise ValueError(f"folding parameter m={m} must be >= 1")
    return ((K + T - Fraction(1, m)) * D2 + 1) / (N - S)


def a_of_s(s: int, m: int, r: RationalLike) -> Fraction:
    """Tolerated error fraction (s/(s+1)) (1 - m r / (m - s + 1))."""
    if not 1 <= s <= m:
        raise ValueError(f"interpolation order s={s} must satisfy 1 <= s <= m={m}")
    return Fraction(s, s + 1) * (1 - m * Fraction(r) / (m - s + 1))


def argmax_s_exhaustive(m: int, r: RationalLike) -> tuple[int, Fraction]:
    """Scan every s in [1, m]; ties go to the smaller s."""
    best_s, best_a = 1, a_of_s(1, m, r)
    for s in range(2, m + 1):
        value = a_of_s(s, m, r)
        if value > best_a:
            best_s, best_a = s, value
    return best_s, best_a


def _stationary_point(m: int, r: Fraction) -> float:
    if m * r == 1:
        return m / 2
    radicand = m * (m + 1) * (m * (1 - r) + 2) * r
    if radicand < 0:
        return 1.0
    return (math.sqrt(radicand) - (m + 1)) / float(m * r - 1)


def optimal_s(m: int, r: RationalLike) -> tuple[int, Fraction]:
    """Interpolation order maximizing a(s) over s in [1, m].

    The continuous maximizer s~ is the admissible root of a'(s) = 0; a(s) is
    concave so the integer optimum is one of ceil(s~) - 1 and ceil(s~), after
    clamping both into [1, m].

    Returns:
        Tuple of (s_star, a(s_star)); a(s_star) may be <= 0
    """
    if m < 1:
        raise ValueError(f"folding parameter m={m} must be >= 1")
    r = Fraction(r)
    if r <= 0:
        raise ValueError(f"rate r={r} must be positive")
    upper = math.ceil(_stationary_point(m, r))
    candidates = sorted({min(m, max(1, c)) for c in (upper - 1, upper)})
    best = max(candidates, key=lambda s: (a_of_s(s, m, r), -s))
    return best, a_of_s(best, m, r)


def flcc_optimal_s(N: int, K: int, T: int, S: int, D2: int, m: int) -> tuple[int, Fraction]:
    return optimal_s(m, modified_rate(N, K, T, S, D2, m))


def flcc_threshold_paper(N: int, K: int, T: int, S: int, D2: int, m: int) -> int:
    """floor((s/(s+1)) (N - m D2 (K + T - 1/m)/(m - s + 1) - S - 1)) at s = s*, clamped at 0."""
    _check_lcc(N, K, T, S, D2)
    s, _ = flcc_optimal_s(N, K, T, S, D2, m)
    value = Fraction(s, s + 1) * (
        N - Fraction(m * D2) * (K + T - Fraction(1, m)) / (m - s + 1) - S - 1
    )
    return max(0, math.floor(value))


def flcc_threshold_exact(N: int, K: int, T: int, S: int, D2: int, m: int) -> int:
    """floor(a(s*) (N - S)), the adversary count certified by the decoding radius."""
    _check_lcc(N, K, T, S, D2)
    _, a = flcc_optimal_s(N, K, T, S, D2, m)
    return max(0, math.floor(a * (N - S)))


def flcc_threshold_asymptotic(N: int, K: int, T: int, S: int, D2: int, eps: RationalLike) -> int:
    """floor((1 - eps)(N - S) - (K + T) D2 - 1), the large-m limit, clamped at 0."""
    eps = Fraction(eps)
    if not 0 < eps < 1:
        raise ValueError(f"eps={eps} must lie strictly between 0 and 1")
    return max(0, math.floor((1 - eps) * (N - S) - (K + T) * D2 - 1))


def flcc_min_workers(K: int, T: int, S: int, A: int, D2: int, m: int) -> int:
    """Smallest N whose flcc_threshold_exact reaches A."""
    if A < 0:
        raise ValueError(f"adversary count A={A} must be >= 0")
    N = (K + T - 1) * D2 + S + 1
    while flcc_threshold_exact(N, K, T, S, D2, m) < A:
        N += 1
    return N


def normalized_extra_computation(m: int, s_star: int) -> Fraction:
    """(s* - 1)/m: side-information evaluations per folded output."""
    if not 1 <= s_star <= m:
        raise ValueError(f"s*={s_star} must satisfy 1 <= s* <= m={m}")
    return Fraction(s_star - 1, m)
