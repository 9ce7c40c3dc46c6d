"""
FLCC protocol parameters and datasets.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from foldcc.codes.frs import FrsParams
from foldcc.core.field import Fe, PrimeField
from foldcc.protocol.thresholds import (
    flcc_optimal_s,
    flcc_threshold_exact,
    flcc_threshold_paper,
    lcc_threshold,
    modified_rate,
)

logger = logging.getLogger(__name__)


class FlccParams(BaseModel):
    """Parameters of one FLCC deployment.

    Worker i (0-based) is assigned the evaluation points alpha^(im) ..
    alpha^(im+m-1). The m(K+T) interpolation points are the next powers of
    alpha, so the two sets are disjoint whenever q-1 >= Nm + m(K+T).

    Example:
        ```python
        params = FlccParams(field=PrimeField.from_modulus(257), N=40, K=2, T=1, S=2, m=4, D2=2)
        params.threshold_exact  # 19
        ```
    """

    model_config = ConfigDict(frozen=True)

    field: PrimeField
    N: int
    K: int
    T: int
    S: int
    m: int
    D2: int
    A: int = 0

    @model_validator(mode="after")
    def _validate_protocol(self) -> "FlccParams":
        """Check counts, point budget and interpolability."""
        if self.N < 1 or self.K < 1 or self.m < 1 or self.D2 < 1:
            raise ValueError("N, K, m and D2 must all be >= 1")
        if self.T < 0 or self.S < 0 or self.A < 0:
            raise ValueError("T, S and A must be >= 0")
        if self.S >= self.N:
            raise ValueError(f"straggler count S={self.S} must be < N={self.N}")
        if self.A > self.N - self.S:
            raise ValueError(f"adversary count A={self.A} exceeds N - S = {self.N - self.S}")
        q = self.field.q
        if q - 1 < self.N * self.m:
            raise ValueError(
                f"q-1={q - 1} < N*m={self.N * self.m}: not enough evaluation points"
            )
        if q <= self.N * self.m + self.interpolation_size:
            raise ValueError(
                f"q={q} must exceed N*m + m(K+T) = {self.N * self.m + self.interpolation_size} "
                "so evaluation and interpolation points are disjoint"
            )
        if self.composed_degree + 1 >= self.N * self.m:
            raise ValueError(
                f"composed degree D={self.composed_degree} must satisfy D < N*m - 1 "
                f"= {self.N * self.m - 1}"
            )
        return self

    @property
    def interpolation_size(self) -> int:
        return self.m * (self.K + self.T)

    @property
    def outputs(self) -> int:
        """Number of folded outputs mK."""
        return self.m * self.K

    @property
    def composed_degree(self) -> int:
        """Degree (m(K+T) - 1) D2 of f_m = g(u_m)."""
        return (self.interpolation_size - 1) * self.D2

    @property
    def decode_k(self) -> int:
        return self.composed_degree + 1

    @property
    def rate(self) -> Fraction:
        return modified_rate(self.N, self.K, self.T, self.S, self.D2, self.m)

    @property
    def s_star(self) -> int:
        return flcc_optimal_s(self.N, self.K, self.T, self.S, self.D2, self.m)[0]

    @property
    def threshold_exact(self) -> int:
        return flcc_threshold_exact(self.N, self.K, self.T, self.S, self.D2, self.m)

    @property
    def threshold_paper(self) -> int:
        return flcc_threshold_paper(self.N, self.K, self.T, self.S, self.D2, self.m)

    @property
    def threshold_lcc(self) -> int:
        return lcc_threshold(self.N, self.K, self.T, self.S, self.D2)

    def evaluation_points(self) -> Fe:
        """alpha^0 .. alpha^(Nm-1)."""
        return self.field.gamma_powers(0, self.N * self.m)

    def interpolation_points(self) -> Fe:
        """alpha^(Nm) .. alpha^(Nm + m(K+T) - 1); the first mK carry data."""
        return self.field.gamma_powers(self.N * self.m, self.interpolation_size)

    def output_points(self) -> Fe:
        return self.interpolation_points()[: self.outputs]

    def frs_params(self) -> FrsParams:
        """The FRS code each output entry is decoded in."""
        return FrsParams(field=self.field, n=self.N * self.m, m=self.m, k=self.decode_k)


@dataclass(frozen=True)
class MatrixDataset:
    """A batch of equally shaped matrices over F_q, stacked on axis 0."""

    inputs: Fe
    outputs: Optional[Fe] = None

    def __post_init__(self) -> None:
        if self.inputs.ndim != 3:
            raise ValueError(f"inputs must be stacked as (count, r, h), got {self.inputs.shape}")
        if self.outputs is not None and self.outputs.shape[0] != self.inputs.shape[0]:
            raise ValueError(
                f"{self.outputs.shape[0]} outputs for {self.inputs.shape[0]} inputs"
            )

    @property
    def count(self) -> int:
        return int(self.inputs.shape[0])

    @property
    def shape(self) -> tuple[int, int]:
        return (int(self.inputs.shape[1]), int(self.inputs.shape[2]))

    @classmethod
    def random(
        cls, field: PrimeField, count: int, shape: tuple[int, int], rng: np.random.Generator
    ) -> "MatrixDataset":
        return cls(inputs=field.random(rng, (count, *shape)))
