from __future__ import annotations

from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from configs.constants import BOTTLENECK_GROWTH_FACTOR
from enums.dilation_mode import DilationMode
from enums.reduction_kind import ReductionKind
from errors import ConfigurationError
from helpers.get_compressed_width import get_compressed_width
from models.block_plan import BlockPlanModel
from models.d2_config import D2Config
from models.reduction import ReductionPolicy


class D3Config(BaseModel):
    """
    Structure of a D3 block: M densely connected D2 blocks.

    `inner.in_channels` is the width of the D3 input. Every D2 block receives the
    concatenation of the D3 input and all earlier reduced block outputs, passed
    through a bottleneck to B channels when that concatenation is wider than B.

    Attributes:
        M: Number of D2 blocks.
        inner: Shared D2 structure.
        B: Bottleneck width, 4k when enabled, None to disable.
        reduction: Policy applied to each D2 output.
    """

    model_config = ConfigDict(frozen=True)

    type: Literal["d3"] = "d3"
    M: int = Field(ge=1)
    inner: D2Config
    B: Optional[int] = Field(default=None, ge=1)
    reduction: ReductionPolicy = Field(default_factory=ReductionPolicy.none)

    @model_validator(mode="after")
    def validate_structure(self) -> D3Config:
        if self.B is not None and self.B != BOTTLENECK_GROWTH_FACTOR * self.inner.k:
            raise ValueError(f"Bottleneck width B={self.B} must equal {BOTTLENECK_GROWTH_FACTOR}k = "
                             f"{BOTTLENECK_GROWTH_FACTOR * self.inner.k}")

        if self.reduction.kind is ReductionKind.LAST_N and not 1 <= (self.reduction.n or 0) <= self.inner.L:
            raise ValueError(f"LastN requires 1 <= N <= L={self.inner.L}, got N={self.reduction.n}")

        return self

    def plan(self) -> List[BlockPlanModel]:
        """
        Channel widths of every D2 block, in order.

        Raises:
            ConfigurationError: If compression would leave a block with zero channels.
        """
        plans: List[BlockPlanModel] = []
        available = self.in_channels

        for index in range(1, self.M + 1):
            bottleneck = self.B is not None and available > self.B
            d2_in = self.B if bottleneck and self.B is not None else available
            d2_out = d2_in + self.inner.L * self.inner.k
            out = self._reduced_width(d2_out)

            if out < 1:
                raise ConfigurationError(
                    f"Compression c={self.reduction.c} leaves block {index} with zero channels (m={d2_out})"
                )

            plans.append(
                BlockPlanModel(
                    index=index,
                    input_channels=available,
                    bottleneck=bottleneck,
                    d2_in_channels=d2_in,
                    d2_out_channels=d2_out,
                    out_channels=out,
                )
            )
            available += out

        return plans

    def block_config(self, plan: BlockPlanModel) -> D2Config:
        return self.inner.with_in_channels(plan.d2_in_channels)

    def with_in_channels(self, in_channels: int) -> D3Config:
        return self.model_copy(update={"inner": self.inner.with_in_channels(in_channels)})

    def with_mode(self, mode: DilationMode) -> D3Config:
        return self.model_copy(update={"inner": self.inner.with_mode(mode)})

    @property
    def in_channels(self) -> int:
        return self.inner.in_channels

    @property
    def out_channels(self) -> int:
        return self.plan()[-1].out_channels

    def _reduced_width(self, d2_out: int) -> int:
        if self.reduction.kind is ReductionKind.COMPRESS:
            return get_compressed_width(self.reduction.c or 0.0, d2_out)

        if self.reduction.kind is ReductionKind.LAST_N:
            return (self.reduction.n or 0) * self.inner.k

        return d2_out
