from typing import List, Optional

import numpy as np

from enums.reduction_kind import ReductionKind
from errors import ConfigurationError
from helpers.get_layer_path import get_layer_path
from interfaces.layer import LayerInterface
from layers.d2_block import D2BlockLayer
from layers.psi_conv import PsiConvLayer
from models.block_plan import BlockPlanModel
from models.d3_config import D3Config
from models.d3_weights import D3BlockWeights, D3Weights
from models.tensor import Tensor
from services.tensor.helpers.concat_channels import concat_channels, split_channels


class D3BlockLayer(LayerInterface):
    """
    M densely connected D2 blocks.

    Block m reads concat(input, reduced outputs of blocks 1 .. m-1), applies the
    bottleneck when that is wider than B, then the D2 block, then the reduction.
    The D3 output is the reduced output of the last block.
    """

    # ───────────────────────────────────────────────────────────
    # PROPERTIES
    # ───────────────────────────────────────────────────────────
    _name: str
    _config: D3Config
    _plan: List[BlockPlanModel]
    _bottlenecks: List[Optional[PsiConvLayer]]
    _blocks: List[D2BlockLayer]
    _reductions: List[Optional[PsiConvLayer]]

    # ───────────────────────────────────────────────────────────
    # CONSTRUCTOR
    # ───────────────────────────────────────────────────────────
    def __init__(self, name: str, config: D3Config, weights: D3Weights) -> None:
        self._name = name
        self._config = config
        self._plan = config.plan()

        if len(weights.blocks) != config.M:
            raise ConfigurationError(f"{name or 'd3'}: {len(weights.blocks)} block weight sets for M={config.M}")

        self._bottlenecks = []
        self._blocks = []
        self._reductions = []

        for plan, block_weights in zip(self._plan, weights.blocks, strict=True):
            self._add_block(plan, block_weights)

    # ───────────────────────────────────────────────────────────
    # PUBLIC METHODS
    # ───────────────────────────────────────────────────────────
    def forward(self, input: Tensor) -> Tensor:  # noqa: A002
        if input.c != self._config.in_channels:
            raise ConfigurationError(
                f"{self._name or 'd3'}: configured for {self._config.in_channels} input channels, got {input.c}"
            )

        sources = [input]

        for index in range(self._config.M):
            block_input = concat_channels(sources)
            bottleneck = self._bottlenecks[index]
            squeezed = bottleneck.forward(block_input) if bottleneck is not None else block_input
            block_output = self._blocks[index].forward(squeezed)
            sources.append(self._reduce_forward(index, block_output))

        return sources[-1]

    def backward(self, grad_output: Tensor) -> Tensor:
        widths = [self._config.in_channels] + [plan.out_channels for plan in self._plan]
        grads = [np.zeros((grad_output.n, width, grad_output.h, grad_output.w)) for width in widths]
        grads[-1] += grad_output.data

        for index in range(self._config.M - 1, -1, -1):
            grad_block = self._reduce_backward(index, Tensor(grads[index + 1]))
            grad_squeezed = self._blocks[index].backward(grad_block)
            bottleneck = self._bottlenecks[index]
            grad_input = bottleneck.backward(grad_squeezed) if bottleneck is not None else grad_squeezed

            for source, part in enumerate(split_channels(grad_input, widths[: index + 1])):
                grads[source] += part.data

        return Tensor(grads[0])

    def children(self) -> List[LayerInterface]:
        layers: List[LayerInterface] = []

        for bottleneck, block, reduction in zip(self._bottlenecks, self._blocks, self._reductions, strict=True):
            if bottleneck is not None:
                layers.append(bottleneck)

            layers.append(block)

            if reduction is not None:
                layers.append(reduction)

        return layers

    # ───────────────────────────────────────────────────────────
    # GETTERS
    # ───────────────────────────────────────────────────────────
    @property
    def config(self) -> D3Config:
        return self._config

    @property
    def blocks(self) -> List[D2BlockLayer]:
        return list(self._blocks)

    @property
    def out_channels(self) -> int:
        return self._plan[-1].out_channels

    # ───────────────────────────────────────────────────────────
    # PRIVATE METHODS
    # ───────────────────────────────────────────────────────────
    def _add_block(self, plan: BlockPlanModel, weights: D3BlockWeights) -> None:
        prefix = get_layer_path(self._name, f"block{plan.index}")
        compress = self._config.reduction.kind is ReductionKind.COMPRESS

        if plan.bottleneck != (weights.bottleneck is not None):
            raise ConfigurationError(f"{prefix}: bottleneck weights {'missing' if plan.bottleneck else 'unexpected'}")

        if compress != (weights.reduction is not None):
            raise ConfigurationError(f"{prefix}: compression weights {'missing' if compress else 'unexpected'}")

        bottleneck = None

        if weights.bottleneck is not None:
            bottleneck = PsiConvLayer(get_layer_path(prefix, "bottleneck"), weights.bottleneck)
            self._check_width(bottleneck, plan.input_channels, plan.d2_in_channels)

        reduction = None

        if weights.reduction is not None:
            reduction = PsiConvLayer(get_layer_path(prefix, "compress"), weights.reduction)
            self._check_width(reduction, plan.d2_out_channels, plan.out_channels)

        self._bottlenecks.append(bottleneck)
        self._blocks.append(D2BlockLayer(prefix, self._config.block_config(plan), weights.d2))
        self._reductions.append(reduction)

    def _check_width(self, layer: PsiConvLayer, in_channels: int, out_channels: int) -> None:
        if (layer.in_channels, layer.out_channels) != (in_channels, out_channels):
            raise ConfigurationError(
                f"{layer.name}: maps {layer.in_channels} -> {layer.out_channels} channels, "
                f"expected {in_channels} -> {out_channels}"
            )

    def _reduce_forward(self, index: int, block_output: Tensor) -> Tensor:
        reduction = self._reductions[index]

        if reduction is not None:
            return reduction.forward(block_output)

        if self._config.reduction.kind is ReductionKind.LAST_N:
            return self._blocks[index].state.last(self._config.reduction.n or 0)

        return block_output

    def _reduce_backward(self, index: int, grad_reduced: Tensor) -> Tensor:
        reduction = self._reductions[index]

        if reduction is not None:
            return reduction.backward(grad_reduced)

        if self._config.reduction.kind is ReductionKind.LAST_N:
            width = self._plan[index].d2_out_channels
            grad = np.zeros((grad_reduced.n, width, grad_reduced.h, grad_reduced.w))
            grad[:, width - grad_reduced.c :] = grad_reduced.data
            return Tensor(grad)

        return grad_reduced
