from __future__ import annotations

from typing import List

from pydantic import BaseModel, ConfigDict, Field, model_validator


class StemConfig(BaseModel):
    """
    Plain convolutions in front of the first D3 block.

    The first convolution has no ψ; every later one is preceded by ψ. A stride of
    2 subsamples the convolution output.
    """

    model_config = ConfigDict(frozen=True)

    in_channels: int = Field(default=3, ge=1)
    channels: List[int] = Field(default_factory=lambda: [64, 64])
    kernel: int = Field(default=3, ge=1)
    strides: List[int] = Field(default_factory=lambda: [2, 1])

    @model_validator(mode="after")
    def validate_layers(self) -> StemConfig:
        if not self.channels:
            raise ValueError("Stem needs at least one convolution")

        if len(self.channels) != len(self.strides):
            raise ValueError(f"{len(self.channels)} stem channels but {len(self.strides)} strides")

        if any(stride not in (1, 2) for stride in self.strides):
            raise ValueError(f"Stem strides must be 1 or 2, got {self.strides}")

        if any(width < 1 for width in self.channels):
            raise ValueError(f"Stem channels must be positive, got {self.channels}")

        if self.kernel % 2 == 0:
            raise ValueError(f"Stem kernel must be odd, got {self.kernel}")

        return self

    @property
    def out_channels(self) -> int:
        return self.channels[-1]

    @property
    def total_stride(self) -> int:
        total = 1

        for stride in self.strides:
            total *= stride

        return total
