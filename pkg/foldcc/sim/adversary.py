"""
Byzantine adversary models.

Adversaries act on a stack of received symbols shaped (N, m, ...). They pick
their workers among the non-stragglers and overwrite those workers' symbols.
"""

import logging
from enum import Enum
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from foldcc.core.field import Fe, PrimeField

logger = logging.getLogger(__name__)


class AdversaryKind(str, Enum):
    """How a corrupted worker's symbols are replaced."""

    UNIFORM_RANDOM = "uniform_random"  # every element uniform over F_q
    SYMBOL_BURST = "symbol_burst"  # one slot per symbol gets a nonzero offset
    ALIASING = "aliasing"  # symbols of another valid codeword


class AdversaryModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: AdversaryKind = AdversaryKind.UNIFORM_RANDOM
    count: int = Field(default=0, ge=0)


def choose_corrupted(rng: np.random.Generator, erased: np.ndarray, count: int) -> np.ndarray:
    """Pick ``count`` distinct non-erased symbol indices, sorted.

    Raises:
        ValueError: If fewer than ``count`` symbols are available
    """
    candidates = np.flatnonzero(~erased)
    if count > len(candidates):
        raise ValueError(f"cannot corrupt {count} of {len(candidates)} responding workers")
    return np.sort(rng.choice(candidates, size=count, replace=False))


def corrupt(
    symbols: Fe,
    corrupted: np.ndarray,
    kind: AdversaryKind,
    field: PrimeField,
    rng: np.random.Generator,
    alias: Optional[Fe] = None,
) -> Fe:
    """Return a copy of ``symbols`` with the corrupted rows replaced.

    Args:
        symbols: Honest symbols, shape (N, m, ...)
        corrupted: Indices of corrupted symbols
        kind: Adversary model
        field: The field of the symbols
        rng: Randomness for the corruption
        alias: Symbols of the alternate codeword, required for aliasing

    Raises:
        ValueError: If aliasing is requested without ``alias``
    """
    out = symbols.copy()
    if len(corrupted) == 0:
        return out
    if kind == AdversaryKind.UNIFORM_RANDOM:
        out[corrupted] = field.random(rng, (len(corrupted), *symbols.shape[1:]))
    elif kind == AdversaryKind.SYMBOL_BURST:
        m = symbols.shape[1]
        slots = rng.integers(0, m, size=len(corrupted))
        offsets = field.random_nonzero(rng, (len(corrupted), *symbols.shape[2:]))
        out[corrupted, slots] = out[corrupted, slots] + offsets
    elif kind == AdversaryKind.ALIASING:
        if alias is None:
            raise ValueError("aliasing adversaries need the symbols of an alternate codeword")
        out[corrupted] = alias[corrupted]
    logger.debug(f"{kind.value} adversary corrupted symbols {corrupted.tolist()}")
    return out
