from __future__ import annotations

from typing import List, Literal, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from enums.dilation_mode import DilationMode


class D2Config(BaseModel):
    """
    Structure of one D2 block.

    Attributes:
        L: Number of densely connected layers.
        k: Growth rate, i.e. channels emitted by every layer.
        kernel: Odd (kh, kw) size of the per-layer convolution.
        mode: Dilation assignment.
        in_channels: Width c0 of the block input x_0.
    """

    model_config = ConfigDict(frozen=True)

    type: Literal["d2"] = "d2"
    L: int = Field(ge=1)
    k: int = Field(ge=1)
    kernel: Tuple[int, int] = (3, 3)
    mode: DilationMode = DilationMode.MULTI
    in_channels: int = Field(default=1, ge=1)

    @field_validator("kernel")
    @classmethod
    def validate_kernel(cls, value: Tuple[int, int]) -> Tuple[int, int]:
        if any(size < 1 or size % 2 == 0 for size in value):
            raise ValueError(f"Kernel size must be odd and positive, got {value}")

        return value

    def layer_in_channels(self, layer: int) -> int:
        """Input width of 1-based layer `layer`: c0 + (layer - 1) * k."""
        return self.in_channels + (layer - 1) * self.k

    def source_widths(self, layer: int) -> List[int]:
        """Channel widths of the sources x_0 .. x_{layer-1} feeding `layer`."""
        return [self.in_channels] + [self.k] * (layer - 1)

    def with_in_channels(self, in_channels: int) -> D2Config:
        return self.model_copy(update={"in_channels": in_channels})

    def with_mode(self, mode: DilationMode) -> D2Config:
        return self.model_copy(update={"mode": mode})

    @property
    def out_channels(self) -> int:
        return self.in_channels + self.L * self.k
