from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, ConfigDict

from models.conv_kernel import ConvKernel
from models.norm_params import NormParams


class PsiConvWeights(BaseModel):
    """ψ parameters followed by a convolution kernel. `norm` is None for a bare convolution."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    norm: Optional[NormParams] = None
    kernel: ConvKernel

    @property
    def size(self) -> int:
        norm = 0 if self.norm is None else 2 * self.norm.channels
        return norm + self.kernel.size
