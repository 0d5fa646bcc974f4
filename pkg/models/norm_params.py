from __future__ import annotations

from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from configs.constants import DEFAULT_NORM_EPS
from enums.norm_kind import NormKind


class NormParams(BaseModel):
    """
    Per-channel affine parameters of the composite ψ (normalisation + ReLU).

    The arrays are kept writable so an optimizer can update them in place
    between passes.

    Attributes:
        gamma: Per-channel scale.
        beta: Per-channel shift.
        eps: Variance floor used by batch normalisation.
        kind: Which normalisation ψ applies.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    gamma: np.ndarray
    beta: np.ndarray
    eps: float = Field(default=DEFAULT_NORM_EPS, gt=0)
    kind: NormKind = NormKind.BATCH

    @field_validator("gamma", "beta", mode="before")
    @classmethod
    def parse_vector(cls, value: Any) -> np.ndarray:
        array = np.asarray(value, dtype=np.float64)

        if array.ndim != 1:
            raise ValueError(f"Norm parameters must be 1-D vectors, got shape {array.shape}")

        return array

    @model_validator(mode="after")
    def validate_lengths(self) -> NormParams:
        if self.gamma.shape != self.beta.shape:
            raise ValueError(f"gamma and beta lengths differ: {self.gamma.shape[0]} != {self.beta.shape[0]}")

        return self

    @classmethod
    def neutral(cls, channels: int, kind: NormKind = NormKind.BATCH, eps: float = DEFAULT_NORM_EPS) -> NormParams:
        """gamma = 1, beta = 0 for the given channel count."""
        return cls(gamma=np.ones(channels), beta=np.zeros(channels), eps=eps, kind=kind)

    @property
    def channels(self) -> int:
        return int(self.gamma.shape[0])
