"""
Parameter sweeps for the bound comparison and threshold tables.

Rows are plain dicts with string-formatted values so they serialize
identically to CSV and JSON; probabilities and ratios carry 6 significant
digits.
"""

import logging
from typing import Literal, Optional, Sequence

from foldcc.codes.bounds import bound_gr2016, bound_ours, bound_saraf
from foldcc.protocol.thresholds import (
    flcc_optimal_s,
    flcc_threshold_asymptotic,
    flcc_threshold_exact,
    flcc_threshold_paper,
    lcc_threshold,
    normalized_extra_computation,
)

logger = logging.getLogger(__name__)

BoundName = Literal["ours", "gr2016", "saraf"]
Row = dict[str, str]


def fmt(value: float) -> str:
    """6 significant digits: 2.99991e-05, 0.298578, 0, 1."""
    return f"{float(value):.6g}"


def sweep_bounds(
    which: BoundName,
    values: Sequence[int],
    k: int,
    q: Optional[int] = None,
    n: Optional[int] = None,
    l: Optional[int] = None,
) -> list[Row]:
    """One row per grid value of the swept variable.

    ``values`` is the number of side-information points t for ``ours`` and
    ``saraf`` and the number of evaluations for ``gr2016``.

    Raises:
        ValueError: If a parameter the chosen bound needs is missing
    """
    rows: list[Row] = []
    if which == "ours":
        if q is None or l is None:
            raise ValueError("bound 'ours' needs --q and --l")
        for t in values:
            rows.append({"q": str(q), "k": str(k), "l": str(l), "t": str(t),
                         "bound": fmt(bound_ours(q, k, l, t))})
    elif which == "gr2016":
        if q is None:
            raise ValueError("bound 'gr2016' needs --q")
        for evals in values:
            rows.append({"q": str(q), "k": str(k), "evals": str(evals),
                         "bound": fmt(bound_gr2016(q, k, evals))})
    elif which == "saraf":
        if n is None or l is None:
            raise ValueError("bound 'saraf' needs --n and --l")
        for t in values:
            rows.append({"n": str(n), "k": str(k), "l": str(l), "t": str(t),
                         "bound": fmt(bound_saraf(n, k, l, t))})
    else:
        raise ValueError(f"unknown bound {which!r}; choose ours, gr2016 or saraf")
    logger.info(f"Swept bound {which} over {len(rows)} points")
    return rows


def sweep_thresholds(
    N: int, K: int, T: int, S: int, D2: int, m_list: Sequence[int], eps: Optional[str] = None
) -> list[Row]:
    """Per m: s*, a(s*), both FLCC thresholds, the LCC threshold, their ratio
    and the normalized extra computation. ``eps`` adds the large-m column.
    """
    a_lcc = lcc_threshold(N, K, T, S, D2)
    rows: list[Row] = []
    for m in m_list:
        s_star, a = flcc_optimal_s(N, K, T, S, D2, m)
        a_paper = flcc_threshold_paper(N, K, T, S, D2, m)
        row = {
            "m": str(m),
            "s_star": str(s_star),
            "a_s_star": fmt(a),
            "A_paper": str(a_paper),
            "A_exact": str(flcc_threshold_exact(N, K, T, S, D2, m)),
            "A_LCC": str(a_lcc),
            "ratio_paper": fmt(a_paper / a_lcc) if a_lcc else "nan",
            "extra_computation": fmt(normalized_extra_computation(m, s_star)),
        }
        if eps is not None:
            row["A_asymptotic"] = str(flcc_threshold_asymptotic(N, K, T, S, D2, eps))
        rows.append(row)
    logger.info(f"Swept thresholds over {len(rows)} folding parameters")
    return rows
