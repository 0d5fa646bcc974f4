from typing import Optional, Tuple, Union

from configs.presets import PRESETS, REFERENCE_PARAMS
from enums.dilation_mode import DilationMode
from enums.norm_kind import NormKind
from errors import ConfigurationError, UnknownNameError
from helpers.get_config_by_path import parse_config
from interfaces.layer import LayerInterface
from layers.backbone import BackboneLayer
from layers.d2_block import D2BlockLayer
from layers.d3_block import D3BlockLayer
from layers.psi_conv import PsiConvLayer
from layers.toy_model import ToyModelLayer
from models.backbone_config import BackboneConfig
from models.d2_config import D2Config
from models.d3_config import D3Config
from models.layer_graph import LayerGraph
from models.param_report import ParamReport
from services.analyzer.helpers.build_graph import build_graph
from services.logging import LoggingService
from services.model_builder.helpers.count_parameters import count_backbone, count_d2, count_d3
from services.weights import WeightsService

AnyConfig = Union[D2Config, D3Config, BackboneConfig]


class ModelBuilderService:
    """Presets, parameter counting and executable model construction."""

    # ───────────────────────────────────────────────────────────
    # PROPERTIES
    # ───────────────────────────────────────────────────────────
    _log: LoggingService

    # ───────────────────────────────────────────────────────────
    # CONSTRUCTOR
    # ───────────────────────────────────────────────────────────
    def __init__(self) -> None:
        self._log = LoggingService()
        self._log.setup("model_builder_service")

    # ───────────────────────────────────────────────────────────
    # PUBLIC METHODS
    # ───────────────────────────────────────────────────────────
    def preset(self, name: str, mode: Optional[DilationMode] = None) -> BackboneConfig:
        """
        Named backbone configuration.

        Args:
            name: "d3net_s" or "d3net_l".
            mode: Dilation mode for every scale; the presets use MULTI.

        Raises:
            UnknownNameError: On an unknown preset name.
        """
        if name not in PRESETS:
            raise UnknownNameError(f"Unknown preset '{name}', expected one of: {', '.join(sorted(PRESETS))}")

        config = parse_config(PRESETS[name])

        if not isinstance(config, BackboneConfig):
            raise ConfigurationError(f"Preset '{name}' is not a backbone config")

        return config.with_mode(mode) if mode is not None else config

    def param_count(self, config: AnyConfig, name: str = "custom", reference: Optional[int] = None) -> ParamReport:
        """Parameter count per layer path, computed from the config alone."""
        report = ParamReport(name=name, reference=reference)

        if isinstance(config, D2Config):
            count_d2(config, report)
        elif isinstance(config, D3Config):
            count_d3(config, report)
        else:
            count_backbone(config, report)

        self._log.info(f"{name}: {report.total:,} parameters ({report.total_human})")
        return report

    def preset_param_count(self, name: str) -> ParamReport:
        return self.param_count(self.preset(name), name=name, reference=REFERENCE_PARAMS.get(name))

    def build_backbone(self, config: BackboneConfig, seed: int = 0) -> Tuple[BackboneLayer, LayerGraph]:
        """
        Seeded executable backbone and its feature graph.

        Raises:
            ConfigurationError: If the config cannot be realised.
        """
        model = BackboneLayer(config, WeightsService(seed=seed).backbone(config))
        graph = build_graph(config)

        self._log.info(f"Built backbone with {model.param_count:,} parameters and {len(graph.nodes)} graph nodes")
        return model, graph

    def build_block(
        self,
        config: Union[D2Config, D3Config],
        seed: int = 0,
        norm_kind: NormKind = NormKind.BATCH,
        name: str = "",
    ) -> LayerInterface:
        weights = WeightsService(seed=seed, norm_kind=norm_kind)

        if isinstance(config, D2Config):
            return D2BlockLayer(name, config, weights.d2(config))

        return D3BlockLayer(name, config, weights.d3(config))

    def build_toy_model(self, config: Union[D2Config, D3Config], seed: int = 0) -> ToyModelLayer:
        """
        Block with fixed affine ψ followed by a ψ + 1×1 head to one channel.

        The block input width is forced to the two toy channels.
        """
        config = config.with_in_channels(2)
        weights = WeightsService(seed=seed, norm_kind=NormKind.FIXED_AFFINE)

        if isinstance(config, D2Config):
            block: LayerInterface = D2BlockLayer("block", config, weights.d2(config))
            width = config.out_channels
        else:
            block = D3BlockLayer("block", config, weights.d3(config))
            width = config.out_channels

        head = PsiConvLayer("head", weights.psi_conv(width, 1))
        return ToyModelLayer(block, head)
