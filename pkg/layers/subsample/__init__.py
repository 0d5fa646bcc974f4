from typing import Optional, Tuple

import numpy as np

from interfaces.layer import LayerInterface
from models.tensor import Tensor


class SubsampleLayer(LayerInterface):
    """Keeps every `stride`-th row and column, starting at 0."""

    _name: str
    _stride: int
    _shape: Optional[Tuple[int, int, int, int]]

    def __init__(self, name: str, stride: int) -> None:
        self._name = name
        self._stride = stride
        self._shape = None

    def forward(self, input: Tensor) -> Tensor:  # noqa: A002
        self._shape = input.shape
        return Tensor(input.data[:, :, :: self._stride, :: self._stride])

    def backward(self, grad_output: Tensor) -> Tensor:
        if self._shape is None:
            raise RuntimeError(f"{self._name}: backward called before forward")

        grad_input = np.zeros(self._shape)
        grad_input[:, :, :: self._stride, :: self._stride] = grad_output.data
        return Tensor(grad_input)

    @property
    def stride(self) -> int:
        return self._stride
