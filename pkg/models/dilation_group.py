from __future__ import annotations

from pydantic import BaseModel, Field, model_validator


class DilationGroup(BaseModel):
    """Half-open input-channel range [channel_start, channel_end) convolved with one dilation factor."""

    channel_start: int = Field(ge=0)
    channel_end: int = Field(ge=1)
    dilation: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def validate_range(self) -> DilationGroup:
        if self.channel_start >= self.channel_end:
            raise ValueError(f"Empty channel range [{self.channel_start}, {self.channel_end})")

        return self

    @property
    def width(self) -> int:
        return self.channel_end - self.channel_start
