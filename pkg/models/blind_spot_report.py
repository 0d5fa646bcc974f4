from __future__ import annotations

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, computed_field


class GroupCoverageModel(BaseModel):
    """Coverage reached through one incoming source group of a layer."""

    source: str
    dilation: int
    coverage: List[int]
    blind_spots: List[int]

    @computed_field
    @property
    def hull_width(self) -> int:
        return self.coverage[-1] - self.coverage[0] + 1 if self.coverage else 0

    @computed_field
    @property
    def alias(self) -> bool:
        return bool(self.blind_spots)


class LayerCoverageModel(BaseModel):
    layer: str
    block: int = 0
    index: int = 0
    coverage: List[int]
    half_width: int
    groups: List[GroupCoverageModel] = Field(default_factory=list)

    @computed_field
    @property
    def alias(self) -> bool:
        return any(group.alias for group in self.groups)


class BlindSpotReport(BaseModel):
    """
    Per-layer, per-source-group coverage of a D2/D3/backbone description.

    `alias` is true iff any group has blind spots.
    """

    config: Dict[str, Any]
    layers: List[LayerCoverageModel]
    output: Optional[str] = None
    output_coverage: List[int] = Field(default_factory=list)

    @computed_field
    @property
    def alias(self) -> bool:
        return any(layer.alias for layer in self.layers)

    @computed_field
    @property
    def half_width(self) -> int:
        if not self.output_coverage:
            return 0

        return max(-self.output_coverage[0], self.output_coverage[-1])

    def layer(self, name: str) -> LayerCoverageModel:
        for layer in self.layers:
            if layer.layer == name:
                return layer

        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json")

    def to_rows(self) -> List[Dict[str, Any]]:
        """One flat row per (layer, group), list fields joined with spaces."""
        return [
            {
                "layer": layer.layer,
                "block": layer.block,
                "index": layer.index,
                "source": group.source,
                "dilation": group.dilation,
                "coverage": " ".join(str(offset) for offset in group.coverage),
                "blind_spots": " ".join(str(offset) for offset in group.blind_spots),
                "hull_width": group.hull_width,
                "alias": group.alias,
            }
            for layer in self.layers
            for group in layer.groups
        ]
