from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, computed_field

from helpers.format_parameter_count import format_parameter_count


class ParamReport(BaseModel):
    """
    Parameter count per layer path (conv weights plus 2 affine parameters per normalised channel).

    Attributes:
        name: Preset or config label.
        entries: Insertion-ordered layer path -> count.
        reference: Published total to compare against, if any.
    """

    name: str = "custom"
    entries: Dict[str, int] = Field(default_factory=dict)
    reference: Optional[int] = Field(default=None, ge=1)

    def add(self, layer: str, count: int) -> None:
        self.entries[layer] = self.entries.get(layer, 0) + count

    def group(self, prefix: str) -> int:
        """Sum of the entries under a dotted path prefix."""
        return sum(count for layer, count in self.entries.items() if layer == prefix or layer.startswith(f"{prefix}."))

    @computed_field
    @property
    def total(self) -> int:
        return sum(self.entries.values())

    @computed_field
    @property
    def total_human(self) -> str:
        return format_parameter_count(self.total)

    @computed_field
    @property
    def deviation(self) -> Optional[float]:
        if self.reference is None:
            return None

        return (self.total - self.reference) / self.reference

    def within(self, tolerance: float) -> bool:
        return self.deviation is None or abs(self.deviation) <= tolerance

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json")

    def to_rows(self) -> List[Dict[str, Any]]:
        return [{"layer": layer, "params": count} for layer, count in self.entries.items()]
