"""
Closed-form success probabilities for side-information pruning.

All bounds are evaluated with exact integer binomials and rational arithmetic
and only converted to float at the end, clamped to [0, 1].
"""

import math
from fractions import Fraction


def _binomial(a: int, b: int) -> int:
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def _clamp(value: Fraction) -> float:
    return float(min(Fraction(1), max(Fraction(0), value)))


def bound_ours_exact(q: int, k: int, l: int, t: int) -> Fraction:
    """Probability that t random nonzero points pin an l-dimensional subspace.

    Sum over i = l..t of C(q-k+l-1, i) C(k-l, t-i) / C(q-1, t). Returns 0
    when t < l.

    Raises:
        ValueError: If l is outside [0, k] or t is outside [0, q-1]
    """
    if not 0 <= l <= k:
        raise ValueError(f"subspace dimension l={l} must satisfy 0 <= l <= k={k}")
    if not 0 <= t <= q - 1:
        raise ValueError(f"t={t} points must satisfy 0 <= t <= q-1={q - 1}")
    if t < l:
        return Fraction(0)
    favourable = sum(
        _binomial(q - k + l - 1, i) * _binomial(k - l, t - i) for i in range(l, t + 1)
    )
    return Fraction(favourable, _binomial(q - 1, t))


def bound_ours(q: int, k: int, l: int, t: int) -> float:
    return _clamp(bound_ours_exact(q, k, l, t))


def bound_gr2016(q: int, k: int, num_evals: int) -> float:
    """Union-bound guarantee max(0, 1 - k * num_evals / q)."""
    if num_evals < 0:
        raise ValueError(f"num_evals={num_evals} must be >= 0")
    return _clamp(1 - Fraction(k * num_evals, q))


def bound_saraf(n: int, k: int, l: int, t: int) -> float:
    """Subspace-design guarantee max(0, 1 - C(t, l-1) (k/n)^(t-l+1)).

    Raises:
        ValueError: If not 1 <= l <= t
    """
    if not 1 <= l <= t:
        raise ValueError(f"requires 1 <= l={l} <= t={t}")
    return _clamp(1 - _binomial(t, l - 1) * Fraction(k, n) ** (t - l + 1))
