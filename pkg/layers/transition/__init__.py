from typing import List

from configs.constants import POOL_SIZE
from errors import DimensionError
from interfaces.layer import LayerInterface
from layers.avg_pool import AvgPoolLayer
from layers.psi_conv import PsiConvLayer
from models.psi_conv_weights import PsiConvWeights
from models.tensor import Tensor


class TransitionLayer(LayerInterface):
    """ψ + 1×1 convolution to floor(in / 2) channels, then 2×2 average pooling."""

    _name: str
    _conv: PsiConvLayer
    _pool: AvgPoolLayer

    def __init__(self, name: str, weights: PsiConvWeights) -> None:
        self._name = name
        self._conv = PsiConvLayer(name, weights)
        self._pool = AvgPoolLayer(f"{name}.pool")

    def forward(self, input: Tensor) -> Tensor:  # noqa: A002
        if input.h % POOL_SIZE or input.w % POOL_SIZE:
            raise DimensionError(f"{self._name}: transition needs even spatial dims, got {input.h}x{input.w}")

        return self._pool.forward(self._conv.forward(input))

    def backward(self, grad_output: Tensor) -> Tensor:
        return self._conv.backward(self._pool.backward(grad_output))

    def children(self) -> List[LayerInterface]:
        return [self._conv, self._pool]
