from __future__ import annotations

from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from configs.constants import BOTTLENECK_GROWTH_FACTOR
from enums.dilation_mode import DilationMode
from enums.reduction_kind import ReductionKind
from models.d2_config import D2Config
from models.d3_config import D3Config
from models.reduction import ReductionPolicy


class ScaleConfig(BaseModel):
    """
    Flat (M, L, k, B, c) description of the D3 block at one backbone scale.

    The input width is only known once the scale is placed in a backbone, so the
    D3Config is produced by `to_d3_config`.
    """

    model_config = ConfigDict(frozen=True)

    M: int = Field(ge=1)
    L: int = Field(ge=1)
    k: int = Field(ge=1)
    B: Optional[int] = Field(default=None, ge=1)
    c: Optional[float] = Field(default=None, gt=0, lt=1)
    n: Optional[int] = Field(default=None, ge=1)
    reduction: ReductionKind = ReductionKind.COMPRESS
    bottleneck: bool = True
    mode: DilationMode = DilationMode.MULTI
    kernel: Tuple[int, int] = (3, 3)

    def to_d3_config(self, in_channels: int) -> D3Config:
        return D3Config(
            M=self.M,
            inner=D2Config(L=self.L, k=self.k, kernel=self.kernel, mode=self.mode, in_channels=in_channels),
            B=self.bottleneck_width,
            reduction=ReductionPolicy(kind=self.reduction, c=self.c, n=self.n),
        )

    def with_mode(self, mode: DilationMode) -> ScaleConfig:
        return self.model_copy(update={"mode": mode})

    @property
    def bottleneck_width(self) -> Optional[int]:
        if not self.bottleneck:
            return None

        return self.B if self.B is not None else BOTTLENECK_GROWTH_FACTOR * self.k
