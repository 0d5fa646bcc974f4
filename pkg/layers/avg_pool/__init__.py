from typing import Optional

from interfaces.layer import LayerInterface
from models.tensor import Tensor
from services.tensor.helpers.avg_pool_2x2 import avg_pool_2x2, avg_pool_2x2_grads


class AvgPoolLayer(LayerInterface):
    _name: str
    _input: Optional[Tensor]

    def __init__(self, name: str) -> None:
        self._name = name
        self._input = None

    def forward(self, input: Tensor) -> Tensor:  # noqa: A002
        self._input = input
        return avg_pool_2x2(input)

    def backward(self, grad_output: Tensor) -> Tensor:
        if self._input is None:
            raise RuntimeError(f"{self._name}: backward called before forward")

        return avg_pool_2x2_grads(self._input, grad_output)
