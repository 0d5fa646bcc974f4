from typing import List

from interfaces.layer import LayerInterface
from layers.psi_conv import PsiConvLayer
from models.tensor import Tensor


class ToyModelLayer(LayerInterface):
    """D2 or D3 block followed by a ψ + 1×1 head emitting one logit per position."""

    _name: str
    _block: LayerInterface
    _head: PsiConvLayer

    def __init__(self, block: LayerInterface, head: PsiConvLayer) -> None:
        self._name = "toy"
        self._block = block
        self._head = head

    def forward(self, input: Tensor) -> Tensor:  # noqa: A002
        return self._head.forward(self._block.forward(input))

    def backward(self, grad_output: Tensor) -> Tensor:
        return self._block.backward(self._head.backward(grad_output))

    def children(self) -> List[LayerInterface]:
        return [self._block, self._head]

    @property
    def block(self) -> LayerInterface:
        return self._block
