from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel

from models.d2_weights import D2Weights
from models.psi_conv_weights import PsiConvWeights


class D3BlockWeights(BaseModel):
    bottleneck: Optional[PsiConvWeights] = None
    d2: D2Weights
    reduction: Optional[PsiConvWeights] = None


class D3Weights(BaseModel):
    blocks: List[D3BlockWeights]
