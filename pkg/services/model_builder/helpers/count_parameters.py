from typing import Tuple

from configs.constants import TRANSITION_COMPRESSION
from enums.reduction_kind import ReductionKind
from helpers.get_layer_path import get_layer_path
from models.backbone_config import SCALE_COUNT, BackboneConfig
from models.d2_config import D2Config
from models.d3_config import D3Config
from models.param_report import ParamReport

POINTWISE = (1, 1)


def count_psi_conv(in_channels: int, out_channels: int, size: Tuple[int, int] = POINTWISE, psi: bool = True) -> int:
    """Bias-free kernel weights plus gamma and beta per ψ input channel."""
    norm = 2 * in_channels if psi else 0
    return norm + out_channels * in_channels * size[0] * size[1]


def count_d2(config: D2Config, report: ParamReport, prefix: str = "") -> None:
    for index in range(1, config.L + 1):
        report.add(
            get_layer_path(prefix, f"layer{index}"),
            count_psi_conv(config.layer_in_channels(index), config.k, config.kernel),
        )


def count_d3(config: D3Config, report: ParamReport, prefix: str = "") -> None:
    for plan in config.plan():
        block = get_layer_path(prefix, f"block{plan.index}")

        if plan.bottleneck:
            report.add(get_layer_path(block, "bottleneck"), count_psi_conv(plan.input_channels, plan.d2_in_channels))

        count_d2(config.block_config(plan), report, block)

        if config.reduction.kind is ReductionKind.COMPRESS:
            report.add(get_layer_path(block, "compress"), count_psi_conv(plan.d2_out_channels, plan.out_channels))


def count_backbone(config: BackboneConfig, report: ParamReport) -> None:
    width = config.stem.in_channels
    size = (config.stem.kernel, config.stem.kernel)

    for index, channels in enumerate(config.stem.channels, start=1):
        report.add(f"stem.conv{index}", count_psi_conv(width, channels, size, psi=index > 1))
        width = channels

    for index, d3_config in enumerate(config.d3_configs(), start=1):
        scale = f"scale{index}"
        count_d3(d3_config, report, scale)
        width = d3_config.out_channels

        if index < SCALE_COUNT:
            report.add(f"{scale}.transition", count_psi_conv(width, width // TRANSITION_COMPRESSION))

        report.add(f"{scale}.extract", count_psi_conv(width, config.extract[index - 1]))

    report.add("fusion", count_psi_conv(sum(config.extract), config.fusion_channels))
