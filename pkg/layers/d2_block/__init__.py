from typing import List, Optional

import numpy as np

from errors import ConfigurationError
from helpers.get_layer_path import get_layer_path
from interfaces.layer import LayerInterface
from layers.psi_conv import PsiConvLayer
from models.block_state import BlockState
from models.d2_config import D2Config
from models.d2_weights import D2Weights
from models.dilation_group import DilationGroup
from models.tensor import Tensor
from services.tensor.helpers.concat_channels import concat_channels, split_channels


class D2BlockLayer(LayerInterface):
    """
    Densely connected stack of ψ + multidilated convolutions.

    Layer l reads concat([x_0 .. x_{l-1}]) and emits k channels; the block output
    is concat([x_0 .. x_L]).
    """

    # ───────────────────────────────────────────────────────────
    # PROPERTIES
    # ───────────────────────────────────────────────────────────
    _name: str
    _config: D2Config
    _layers: List[PsiConvLayer]
    _state: Optional[BlockState]

    # ───────────────────────────────────────────────────────────
    # CONSTRUCTOR
    # ───────────────────────────────────────────────────────────
    def __init__(self, name: str, config: D2Config, weights: D2Weights) -> None:
        self._name = name
        self._config = config
        self._state = None

        if len(weights.layers) != config.L:
            raise ConfigurationError(f"{name or 'd2'}: {len(weights.layers)} weight sets for L={config.L} layers")

        self._layers = [
            PsiConvLayer(get_layer_path(name, f"layer{index}"), layer_weights, self._groups(index))
            for index, layer_weights in enumerate(weights.layers, start=1)
        ]

        for index, layer in enumerate(self._layers, start=1):
            self._check_layer(index, layer, weights)

    # ───────────────────────────────────────────────────────────
    # PUBLIC METHODS
    # ───────────────────────────────────────────────────────────
    def forward(self, input: Tensor) -> Tensor:  # noqa: A002
        if input.c != self._config.in_channels:
            raise ConfigurationError(
                f"{self._name or 'd2'}: configured for {self._config.in_channels} input channels, got {input.c}"
            )

        features = [input]

        for layer in self._layers:
            features.append(layer.forward(concat_channels(features)))

        self._state = BlockState(x0=input, outputs=features[1:])
        return concat_channels(features)

    def backward(self, grad_output: Tensor) -> Tensor:
        widths = [self._config.in_channels] + [self._config.k] * self._config.L
        grads = [part.data.copy() for part in split_channels(grad_output, widths)]

        for index in range(self._config.L, 0, -1):
            grad_input = self._layers[index - 1].backward(Tensor(grads[index]))

            for source, part in enumerate(split_channels(grad_input, widths[:index])):
                grads[source] += part.data

        return Tensor(grads[0])

    def children(self) -> List[LayerInterface]:
        return list(self._layers)

    # ───────────────────────────────────────────────────────────
    # GETTERS
    # ───────────────────────────────────────────────────────────
    @property
    def state(self) -> BlockState:
        if self._state is None:
            raise RuntimeError(f"{self._name or 'd2'}: no forward pass yet")

        return self._state

    @property
    def config(self) -> D2Config:
        return self._config

    @property
    def layers(self) -> List[PsiConvLayer]:
        return list(self._layers)

    # ───────────────────────────────────────────────────────────
    # PRIVATE METHODS
    # ───────────────────────────────────────────────────────────
    def _groups(self, index: int) -> List[DilationGroup]:
        dilations = self._config.mode.dilations(index)

        if not self._config.mode.is_grouped():
            return [
                DilationGroup(channel_start=0, channel_end=self._config.layer_in_channels(index), dilation=dilations[0])
            ]

        bounds = np.cumsum([0, *self._config.source_widths(index)])
        return [
            DilationGroup(channel_start=int(bounds[i]), channel_end=int(bounds[i + 1]), dilation=dilation)
            for i, dilation in enumerate(dilations)
        ]

    def _check_layer(self, index: int, layer: PsiConvLayer, weights: D2Weights) -> None:
        kernel = weights.layers[index - 1].kernel
        expected = (self._config.k, self._config.layer_in_channels(index), *self._config.kernel)
        actual = (kernel.out_channels, kernel.in_channels, kernel.kh, kernel.kw)

        if actual != expected:
            raise ConfigurationError(f"{layer.name}: kernel shape {actual}, expected {expected}")
