from typing import List, Optional, Tuple

import numpy as np

from configs.constants import DEFAULT_NORM_EPS, TRANSITION_COMPRESSION
from enums.norm_kind import NormKind
from enums.reduction_kind import ReductionKind
from models.backbone_config import SCALE_COUNT, BackboneConfig
from models.backbone_weights import BackboneWeights
from models.conv_kernel import ConvKernel
from models.d2_config import D2Config
from models.d2_weights import D2Weights
from models.d3_config import D3Config
from models.d3_weights import D3BlockWeights, D3Weights
from models.norm_params import NormParams
from models.psi_conv_weights import PsiConvWeights
from services.logging import LoggingService

POINTWISE = (1, 1)


class WeightsService:
    """
    Seeded weight allocation for every block shape.

    Kernels are drawn from N(0, 2 / fan_in), fan_in = in_ch * kh * kw, unless a
    constant `fill` is given; ψ starts at gamma = 1, beta = 0 with the configured
    normalisation kind. Draw order follows construction order, so equal seeds
    give equal weights.
    """

    # ───────────────────────────────────────────────────────────
    # PROPERTIES
    # ───────────────────────────────────────────────────────────
    _rng: np.random.Generator
    _norm_kind: NormKind
    _fill: Optional[float]
    _eps: float
    _log: LoggingService

    # ───────────────────────────────────────────────────────────
    # CONSTRUCTOR
    # ───────────────────────────────────────────────────────────
    def __init__(
        self,
        seed: int = 0,
        norm_kind: NormKind = NormKind.BATCH,
        fill: Optional[float] = None,
        eps: float = DEFAULT_NORM_EPS,
    ) -> None:
        self._rng = np.random.default_rng(seed)
        self._norm_kind = norm_kind
        self._fill = fill
        self._eps = eps

        self._log = LoggingService()
        self._log.setup("weights_service")

    # ───────────────────────────────────────────────────────────
    # PUBLIC METHODS
    # ───────────────────────────────────────────────────────────
    def kernel(self, out_channels: int, in_channels: int, size: Tuple[int, int]) -> ConvKernel:
        shape = (out_channels, in_channels, *size)

        if self._fill is not None:
            return ConvKernel(weights=np.full(shape, self._fill))

        fan_in = in_channels * size[0] * size[1]
        return ConvKernel(weights=self._rng.normal(0.0, np.sqrt(2.0 / fan_in), size=shape))

    def norm(self, channels: int) -> NormParams:
        return NormParams.neutral(channels, kind=self._norm_kind, eps=self._eps)

    def psi_conv(
        self,
        in_channels: int,
        out_channels: int,
        size: Tuple[int, int] = POINTWISE,
        psi: bool = True,
    ) -> PsiConvWeights:
        return PsiConvWeights(
            norm=self.norm(in_channels) if psi else None,
            kernel=self.kernel(out_channels, in_channels, size),
        )

    def d2(self, config: D2Config) -> D2Weights:
        return D2Weights(
            layers=[
                self.psi_conv(config.layer_in_channels(index), config.k, config.kernel)
                for index in range(1, config.L + 1)
            ]
        )

    def d3(self, config: D3Config) -> D3Weights:
        blocks: List[D3BlockWeights] = []

        for plan in config.plan():
            bottleneck = self.psi_conv(plan.input_channels, plan.d2_in_channels) if plan.bottleneck else None
            d2 = self.d2(config.block_config(plan))
            reduction = None

            if config.reduction.kind is ReductionKind.COMPRESS:
                reduction = self.psi_conv(plan.d2_out_channels, plan.out_channels)

            blocks.append(D3BlockWeights(bottleneck=bottleneck, d2=d2, reduction=reduction))

        return D3Weights(blocks=blocks)

    def backbone(self, config: BackboneConfig) -> BackboneWeights:
        stem: List[PsiConvWeights] = []
        width = config.stem.in_channels
        size = (config.stem.kernel, config.stem.kernel)

        for index, channels in enumerate(config.stem.channels):
            stem.append(self.psi_conv(width, channels, size, psi=index > 0))
            width = channels

        scales: List[D3Weights] = []
        transitions: List[PsiConvWeights] = []
        extract: List[PsiConvWeights] = []

        for index, d3_config in enumerate(config.d3_configs()):
            scales.append(self.d3(d3_config))
            width = d3_config.out_channels

            if index < SCALE_COUNT - 1:
                transitions.append(self.psi_conv(width, width // TRANSITION_COMPRESSION))

        for d3_config, channels in zip(config.d3_configs(), config.extract, strict=True):
            extract.append(self.psi_conv(d3_config.out_channels, channels))

        fusion = self.psi_conv(sum(config.extract), config.fusion_channels)

        self._log.debug(f"Allocated backbone weights for {len(scales)} scales")
        return BackboneWeights(stem=stem, scales=scales, transitions=transitions, extract=extract, fusion=fusion)
