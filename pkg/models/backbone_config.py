from __future__ import annotations

from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from configs.constants import TRANSITION_COMPRESSION
from enums.dilation_mode import DilationMode
from models.d3_config import D3Config
from models.scale_config import ScaleConfig
from models.stem_config import StemConfig

SCALE_COUNT = 4


class HeadConfig(BaseModel):
    """Fusion 1×1 width. None keeps the sum of the extraction widths."""

    model_config = ConfigDict(frozen=True)

    out_channels: Optional[int] = Field(default=None, ge=1)


class BackboneConfig(BaseModel):
    """
    Stem, four D3 scales joined by transitions, per-scale extraction and fusion.

    Attributes:
        stem: Stem convolutions.
        scales: One D3 description per scale.
        extract: Width of the ψ + 1×1 feature extraction at each scale.
        head: Fusion settings.
    """

    model_config = ConfigDict(frozen=True)

    type: Literal["backbone"] = "backbone"
    stem: StemConfig = Field(default_factory=StemConfig)
    scales: List[ScaleConfig]
    extract: List[int]
    head: HeadConfig = Field(default_factory=HeadConfig)

    @model_validator(mode="after")
    def validate_scales(self) -> BackboneConfig:
        if len(self.scales) != SCALE_COUNT:
            raise ValueError(f"Backbone needs {SCALE_COUNT} scales, got {len(self.scales)}")

        if len(self.extract) != SCALE_COUNT:
            raise ValueError(f"Backbone needs {SCALE_COUNT} extraction widths, got {len(self.extract)}")

        if any(width < 1 for width in self.extract):
            raise ValueError(f"Extraction widths must be positive, got {self.extract}")

        return self

    def d3_configs(self) -> List[D3Config]:
        """
        Concrete D3Config per scale with input widths chained through transitions.

        Raises:
            ConfigurationError: If a scale plan is infeasible.
        """
        configs: List[D3Config] = []
        width = self.stem.out_channels

        for index, scale in enumerate(self.scales):
            config = scale.to_d3_config(width)
            configs.append(config)
            width = config.out_channels

            if index < SCALE_COUNT - 1:
                width = width // TRANSITION_COMPRESSION

        return configs

    def with_mode(self, mode: DilationMode) -> BackboneConfig:
        return self.model_copy(update={"scales": [scale.with_mode(mode) for scale in self.scales]})

    @property
    def fusion_channels(self) -> int:
        return self.head.out_channels if self.head.out_channels is not None else sum(self.extract)
