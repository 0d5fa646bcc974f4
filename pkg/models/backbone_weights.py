from __future__ import annotations

from typing import List

from pydantic import BaseModel

from models.d3_weights import D3Weights
from models.psi_conv_weights import PsiConvWeights


class BackboneWeights(BaseModel):
    stem: List[PsiConvWeights]
    scales: List[D3Weights]
    transitions: List[PsiConvWeights]
    extract: List[PsiConvWeights]
    fusion: PsiConvWeights
