from abc import ABC, abstractmethod
from typing import List

from models.parameter import ParameterModel
from models.tensor import Tensor


class LayerInterface(ABC):
    """
    Differentiable building block.

    `forward` caches what `backward` needs; `backward` must follow the forward
    call it differentiates and writes parameter gradients into `parameters()`.
    """

    _name: str

    @abstractmethod
    def forward(self, input: Tensor) -> Tensor:  # noqa: A002
        pass

    @abstractmethod
    def backward(self, grad_output: Tensor) -> Tensor:
        pass

    def children(self) -> List["LayerInterface"]:
        return []

    def own_parameters(self) -> List[ParameterModel]:
        return []

    def own_kink_margin(self) -> float:
        return float("inf")

    def parameters(self) -> List[ParameterModel]:
        parameters = list(self.own_parameters())

        for child in self.children():
            parameters.extend(child.parameters())

        return parameters

    def kink_margin(self) -> float:
        """Smallest |pre-activation| seen by any ReLU during the last forward pass."""
        margins = [self.own_kink_margin()] + [child.kink_margin() for child in self.children()]
        return min(margins)

    @property
    def name(self) -> str:
        return self._name

    @property
    def param_count(self) -> int:
        return sum(parameter.size for parameter in self.parameters())
