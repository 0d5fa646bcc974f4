from __future__ import annotations

from typing import List

from pydantic import BaseModel

from models.psi_conv_weights import PsiConvWeights


class D2Weights(BaseModel):
    """Per-layer ψ + multidilated 3×3 weights; index l holds layer l + 1."""

    layers: List[PsiConvWeights]
