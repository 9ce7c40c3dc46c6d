"""
Experiment configuration.

An ExperimentConfig mirrors the ``simulate`` command's flags and may be
loaded from a JSON document with ``--config``. It is validated against the
same rules as FlccParams before any trial runs.
"""

import logging
from pathlib import Path
from typing import Any, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from foldcc.core.field import PrimeField
from foldcc.protocol.decoding import DecodeMode, SideInfoKind
from foldcc.protocol.jobs import JOBS
from foldcc.protocol.params import FlccParams
from foldcc.sim.adversary import AdversaryKind, AdversaryModel

logger = logging.getLogger(__name__)


class ExperimentConfig(BaseModel):
    """A simulation campaign.

    Example:
        ```json
        {"q": 257, "N": 40, "K": 2, "T": 1, "S": 2, "A": 19, "m": 4, "D2": 2,
         "job": "square", "mode": "deterministic", "trials": 100, "seed": 7}
        ```
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    q: int
    gamma: Optional[int] = None
    N: int
    K: int
    T: int
    S: int
    A: int = 0
    m: int
    D2: Optional[int] = None
    job: str = "square"
    adversary: AdversaryKind = AdversaryKind.UNIFORM_RANDOM
    mode: SideInfoKind = "deterministic"
    t: int = 0
    trials: int = Field(default=100, ge=1)
    seed: int = 0
    rows: int = Field(default=2, ge=1)
    cols: int = Field(default=2, ge=1)
    consistency_check: bool = False
    n_jobs: Optional[int] = None
    out: Optional[str] = None

    @model_validator(mode="after")
    def _validate_experiment(self) -> "ExperimentConfig":
        """Check the job, the side-information mode and the protocol parameters."""
        if self.job not in JOBS:
            raise ValueError(f"unknown job {self.job!r}; available: {', '.join(sorted(JOBS))}")
        if self.D2 is not None and self.D2 < JOBS[self.job].declared_degree:
            raise ValueError(
                f"D2={self.D2} is below the declared degree "
                f"{JOBS[self.job].declared_degree} of job {self.job!r}"
            )
        mode = self.decode_mode()
        if mode.predrawn and mode.t > self.q - 1:
            raise ValueError(f"t={self.t} side-information points do not fit in F_{self.q}*")
        self.to_params()
        return self

    @property
    def degree(self) -> int:
        return self.D2 if self.D2 is not None else JOBS[self.job].declared_degree

    def field(self) -> PrimeField:
        if self.gamma is None:
            return PrimeField.from_modulus(self.q)
        return PrimeField(q=self.q, gamma=self.gamma)

    def to_params(self) -> FlccParams:
        return FlccParams(
            field=self.field(),
            N=self.N,
            K=self.K,
            T=self.T,
            S=self.S,
            A=self.A,
            m=self.m,
            D2=self.degree,
        )

    def decode_mode(self) -> DecodeMode:
        if self.mode == "deterministic":
            return DecodeMode.deterministic()
        return DecodeMode(kind=self.mode, t=self.t)

    def adversary_model(self) -> AdversaryModel:
        return AdversaryModel(kind=self.adversary, count=self.A)

    @classmethod
    def from_file(cls, path: Union[str, Path], **overrides: Any) -> "ExperimentConfig":
        """Load a JSON config; non-None overrides replace file values."""
        text = Path(path).read_text()
        if not any(v is not None for v in overrides.values()):
            return cls.model_validate_json(text)
        base = cls.model_validate_json(text).model_dump()
        base.update({k: v for k, v in overrides.items() if v is not None})
        return cls.model_validate(base)
