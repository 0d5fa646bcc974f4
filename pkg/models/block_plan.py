from __future__ import annotations

from pydantic import BaseModel, Field


class BlockPlanModel(BaseModel):
    """Channel bookkeeping of one D2 block inside a D3 block."""

    index: int = Field(ge=1)
    input_channels: int = Field(ge=1)
    bottleneck: bool
    d2_in_channels: int = Field(ge=1)
    d2_out_channels: int = Field(ge=1)
    out_channels: int = Field(ge=1)
