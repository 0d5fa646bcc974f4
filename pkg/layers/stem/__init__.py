from typing import List

from errors import ConfigurationError
from helpers.get_layer_path import get_layer_path
from interfaces.layer import LayerInterface
from layers.psi_conv import PsiConvLayer
from layers.subsample import SubsampleLayer
from models.psi_conv_weights import PsiConvWeights
from models.stem_config import StemConfig
from models.tensor import Tensor


class StemLayer(LayerInterface):
    """Stem convolutions; a stride of 2 is applied by subsampling the convolution output."""

    _name: str
    _config: StemConfig
    _layers: List[LayerInterface]

    def __init__(self, name: str, config: StemConfig, weights: List[PsiConvWeights]) -> None:
        self._name = name
        self._config = config
        self._layers = []

        if len(weights) != len(config.channels):
            raise ConfigurationError(f"{name}: {len(weights)} weight sets for {len(config.channels)} convolutions")

        for index, (layer_weights, stride) in enumerate(zip(weights, config.strides, strict=True), start=1):
            conv_name = get_layer_path(name, f"conv{index}")

            if index == 1 and layer_weights.norm is not None:
                raise ConfigurationError(f"{conv_name}: the first stem convolution has no ψ")

            self._layers.append(PsiConvLayer(conv_name, layer_weights))

            if stride > 1:
                self._layers.append(SubsampleLayer(f"{conv_name}.subsample", stride))

    def forward(self, input: Tensor) -> Tensor:  # noqa: A002
        output = input

        for layer in self._layers:
            output = layer.forward(output)

        return output

    def backward(self, grad_output: Tensor) -> Tensor:
        grad = grad_output

        for layer in reversed(self._layers):
            grad = layer.backward(grad)

        return grad

    def children(self) -> List[LayerInterface]:
        return list(self._layers)
