from __future__ import annotations

from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

KERNEL_RANK = 4


class ConvKernel(BaseModel):
    """
    Bias-free convolution filter bank of shape [out_ch, in_ch, kh, kw].

    kh and kw must be odd so that same-padding is symmetric.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    weights: np.ndarray

    @field_validator("weights", mode="before")
    @classmethod
    def parse_weights(cls, value: Any) -> np.ndarray:
        array = np.asarray(value, dtype=np.float64)

        if array.ndim != KERNEL_RANK:
            raise ValueError(f"Kernel must be [out_ch, in_ch, kh, kw], got shape {array.shape}")

        if min(array.shape) < 1:
            raise ValueError(f"Kernel dimensions must all be >= 1, got shape {array.shape}")

        if array.shape[2] % 2 == 0 or array.shape[3] % 2 == 0:
            raise ValueError(f"Kernel spatial size must be odd, got {array.shape[2]}x{array.shape[3]}")

        return array

    @property
    def out_channels(self) -> int:
        return int(self.weights.shape[0])

    @property
    def in_channels(self) -> int:
        return int(self.weights.shape[1])

    @property
    def kh(self) -> int:
        return int(self.weights.shape[2])

    @property
    def kw(self) -> int:
        return int(self.weights.shape[3])

    @property
    def size(self) -> int:
        return int(self.weights.size)
