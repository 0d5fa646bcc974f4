from typing import Any, Dict, List, Optional, Union

import numpy as np

from enums.dilation_mode import DilationMode
from enums.edge_kind import EdgeKind
from enums.norm_kind import NormKind
from errors import ArgumentError
from interfaces.layer import LayerInterface
from layers.d2_block import D2BlockLayer
from layers.d3_block import D3BlockLayer
from models.backbone_config import BackboneConfig
from models.blind_spot_report import BlindSpotReport, GroupCoverageModel, LayerCoverageModel
from models.coverage_set import CoverageSet
from models.d2_config import D2Config
from models.d3_config import D3Config
from models.tensor import Tensor
from services.analyzer.helpers.blind_spots import blind_spots
from services.analyzer.helpers.build_graph import build_graph
from services.analyzer.helpers.coverage import coverage_map
from services.logging import LoggingService
from services.toy.helpers.perturb_independence import perturb_independence
from services.weights import WeightsService

BlockConfig = Union[D2Config, D3Config]
AnyConfig = Union[D2Config, D3Config, BackboneConfig]

FOOTPRINT_MARGIN = 2


class AnalyzerService:
    """
    Receptive-field analysis of D2/D3/backbone descriptions.

    `analyze` is symbolic. `impulse_footprint` and `empirical_footprint` run the
    actual layers and serve as oracles for it.
    """

    # ───────────────────────────────────────────────────────────
    # PROPERTIES
    # ───────────────────────────────────────────────────────────
    _log: LoggingService

    # ───────────────────────────────────────────────────────────
    # CONSTRUCTOR
    # ───────────────────────────────────────────────────────────
    def __init__(self) -> None:
        self._log = LoggingService()
        self._log.setup("analyzer_service")

    # ───────────────────────────────────────────────────────────
    # PUBLIC METHODS
    # ───────────────────────────────────────────────────────────
    def analyze(self, config: AnyConfig, mode: Optional[DilationMode] = None) -> BlindSpotReport:
        """
        Per-layer, per-source-group coverage and blind spots.

        Args:
            config: Block or backbone description.
            mode: Overrides the dilation mode of every block.

        Returns:
            BlindSpotReport; its `alias` flag is set iff any group has blind spots.
        """
        if mode is not None:
            config = config.with_mode(mode)

        graph = build_graph(config)
        sets = coverage_map(graph)
        layers: List[LayerCoverageModel] = []

        for node in graph.nodes:
            edges = [edge for edge in graph.incoming(node.id) if edge.kind is EdgeKind.CONV]

            if not edges:
                continue

            groups = []

            for edge in edges:
                source = graph.node(edge.source)
                group = CoverageSet.of(
                    offset + tap for offset in sets[edge.source].tolist() for tap in edge.taps(source.stride)
                )
                groups.append(
                    GroupCoverageModel(
                        source=edge.source,
                        dilation=edge.dilation,
                        coverage=group.to_list(),
                        blind_spots=blind_spots(group),
                    )
                )

            node_coverage = CoverageSet.of(sets[node.id].tolist())
            layers.append(
                LayerCoverageModel(
                    layer=node.id,
                    block=node.block,
                    index=node.layer,
                    coverage=node_coverage.to_list(),
                    half_width=node_coverage.half_width,
                    groups=groups,
                )
            )

        report = BlindSpotReport(
            config=config.model_dump(mode="json"),
            layers=layers,
            output=graph.output_id,
            output_coverage=sets[graph.output_id].tolist(),
        )

        self._log.info(
            f"Analyzed {len(layers)} layers: half-width {report.half_width}, alias {'yes' if report.alias else 'no'}"
        )
        return report

    def impulse_footprint(self, config: BlockConfig) -> CoverageSet:
        """
        Brute-force footprint of the block output at the centre position.

        Runs the block with all-ones kernels and identity ψ on a 1-D input, one
        impulse per batch item, and keeps the offsets whose impulse reaches the
        centre output.
        """
        block = self._build_block(config, WeightsService(norm_kind=NormKind.IDENTITY, fill=1.0))
        radius = self._radius_bound(config) + FOOTPRINT_MARGIN
        length = 2 * radius + 1

        impulses = np.zeros((length, config.in_channels, length, 1))
        impulses[np.arange(length), :, np.arange(length), 0] = 1.0

        output = block.forward(Tensor(impulses)).data
        reached = output[:, :, radius, :].sum(axis=(1, 2)) != 0.0

        return CoverageSet.of(int(position) - radius for position in np.flatnonzero(reached))

    def empirical_footprint(self, config: BlockConfig, position: Optional[int] = None, seed: int = 0) -> Dict[str, Any]:
        """
        Footprint found by perturbing one input row at a time on a randomly initialised block.

        Uses fixed affine ψ so positions do not interact through batch statistics.
        The empirical set must be contained in the analytic coverage.
        """
        block = self._build_block(config, WeightsService(seed=seed, norm_kind=NormKind.FIXED_AFFINE))
        graph = build_graph(config)
        analytic = CoverageSet.of(coverage_map(graph)[graph.output_id].tolist())

        length = 2 * (analytic.half_width + FOOTPRINT_MARGIN) + 1
        centre = length // 2 if position is None else position

        if not 0 <= centre < length:
            raise ArgumentError(f"Position {centre} is outside [0, {length})")

        base = Tensor(np.random.default_rng(seed).standard_normal((1, config.in_channels, length, 1)))
        empirical = [
            row - centre for row in range(length) if not perturb_independence(block, base, centre, [row], seed=seed)
        ]
        contained = all(offset in analytic for offset in empirical)

        self._log.info(f"Empirical footprint: {len(empirical)} offsets, contained in analytic hull: {contained}")
        return {
            "config": config.model_dump(mode="json"),
            "position": centre,
            "length": length,
            "seed": seed,
            "empirical": empirical,
            "analytic": analytic.to_list(),
            "contained": contained,
        }

    # ───────────────────────────────────────────────────────────
    # PRIVATE METHODS
    # ───────────────────────────────────────────────────────────
    def _build_block(self, config: BlockConfig, weights: WeightsService) -> LayerInterface:
        if isinstance(config, D2Config):
            return D2BlockLayer("", config, weights.d2(config))

        return D3BlockLayer("", config, weights.d3(config))

    def _radius_bound(self, config: BlockConfig) -> int:
        inner = config if isinstance(config, D2Config) else config.inner
        blocks = 1 if isinstance(config, D2Config) else config.M
        radius = (inner.kernel[0] - 1) // 2
        return blocks * radius * (2**inner.L - 1)
