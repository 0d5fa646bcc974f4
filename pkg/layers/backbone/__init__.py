from typing import List, Optional

import numpy as np

from errors import ConfigurationError
from interfaces.layer import LayerInterface
from layers.d3_block import D3BlockLayer
from layers.psi_conv import PsiConvLayer
from layers.stem import StemLayer
from layers.transition import TransitionLayer
from layers.upsample import UpsampleLayer
from models.backbone_config import SCALE_COUNT, BackboneConfig
from models.backbone_weights import BackboneWeights
from models.tensor import Tensor
from services.tensor.helpers.concat_channels import concat_channels, split_channels


class BackboneLayer(LayerInterface):
    """
    Stem, four D3 scales with transitions, per-scale ψ + 1×1 extraction, bilinear
    upsampling to the first scale, concatenation and a ψ + 1×1 fusion.
    """

    # ───────────────────────────────────────────────────────────
    # PROPERTIES
    # ───────────────────────────────────────────────────────────
    _name: str
    _config: BackboneConfig
    _stem: StemLayer
    _scales: List[D3BlockLayer]
    _transitions: List[TransitionLayer]
    _extract: List[PsiConvLayer]
    _upsample: List[Optional[UpsampleLayer]]
    _fusion: PsiConvLayer

    # ───────────────────────────────────────────────────────────
    # CONSTRUCTOR
    # ───────────────────────────────────────────────────────────
    def __init__(self, config: BackboneConfig, weights: BackboneWeights) -> None:
        self._name = "backbone"
        self._config = config

        if (len(weights.scales), len(weights.transitions), len(weights.extract)) != (
            SCALE_COUNT,
            SCALE_COUNT - 1,
            SCALE_COUNT,
        ):
            raise ConfigurationError("Backbone weights need 4 scales, 3 transitions and 4 extraction layers")

        self._stem = StemLayer("stem", config.stem, weights.stem)
        self._scales = [
            D3BlockLayer(f"scale{index}", d3_config, d3_weights)
            for index, (d3_config, d3_weights) in enumerate(zip(config.d3_configs(), weights.scales, strict=True), 1)
        ]
        self._transitions = [
            TransitionLayer(f"scale{index}.transition", transition)
            for index, transition in enumerate(weights.transitions, start=1)
        ]
        self._extract = [
            PsiConvLayer(f"scale{index}.extract", extract) for index, extract in enumerate(weights.extract, start=1)
        ]
        self._upsample = [None] * SCALE_COUNT
        self._fusion = PsiConvLayer("fusion", weights.fusion)

    # ───────────────────────────────────────────────────────────
    # PUBLIC METHODS
    # ───────────────────────────────────────────────────────────
    def forward(self, input: Tensor) -> Tensor:  # noqa: A002
        features = []
        hidden = self._stem.forward(input)

        for index, scale in enumerate(self._scales):
            output = scale.forward(hidden)
            features.append(output)

            if index < SCALE_COUNT - 1:
                hidden = self._transitions[index].forward(output)

        size = (features[0].h, features[0].w)
        extracted = []

        for index, feature in enumerate(features):
            part = self._extract[index].forward(feature)

            if index > 0:
                upsample = UpsampleLayer(f"scale{index + 1}.upsample", size)
                self._upsample[index] = upsample
                part = upsample.forward(part)

            extracted.append(part)

        return self._fusion.forward(concat_channels(extracted))

    def backward(self, grad_output: Tensor) -> Tensor:
        grad_parts = split_channels(self._fusion.backward(grad_output), self._config.extract)
        grad_features: List[np.ndarray] = []

        for index, part in enumerate(grad_parts):
            upsample = self._upsample[index]
            grad = upsample.backward(part) if upsample is not None else part
            grad_features.append(self._extract[index].backward(grad).data.copy())

        grad_hidden: Optional[Tensor] = None

        for index in range(SCALE_COUNT - 1, -1, -1):
            grad = grad_features[index]

            if grad_hidden is not None:
                grad = grad + self._transitions[index].backward(grad_hidden).data

            grad_hidden = self._scales[index].backward(Tensor(grad))

        assert grad_hidden is not None
        return self._stem.backward(grad_hidden)

    def children(self) -> List[LayerInterface]:
        return [self._stem, *self._scales, *self._transitions, *self._extract, self._fusion]

    # ───────────────────────────────────────────────────────────
    # GETTERS
    # ───────────────────────────────────────────────────────────
    @property
    def config(self) -> BackboneConfig:
        return self._config
