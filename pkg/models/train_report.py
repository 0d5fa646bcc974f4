from __future__ import annotations

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, computed_field


class TrainReport(BaseModel):
    """
    Result of one toy training run.

    `wall_clock` is excluded from serialisation so reports are byte-identical
    across repeated runs.
    """

    run_id: str
    config: Dict[str, Any]
    seed: int
    losses: List[float] = Field(default_factory=list)
    marker_twin_loss: Optional[float] = None
    marker_twin_floor: float
    train_floor: float
    wall_clock: float = Field(default=0.0, exclude=True)

    @computed_field
    @property
    def final_loss(self) -> Optional[float]:
        return self.losses[-1] if self.losses else None

    @computed_field
    @property
    def above_marker_floor(self) -> Optional[bool]:
        if self.marker_twin_loss is None:
            return None

        return self.marker_twin_loss >= self.marker_twin_floor - 1e-6

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json")

    def to_rows(self) -> List[Dict[str, Any]]:
        return [{"run_id": self.run_id, "epoch": epoch + 1, "loss": loss} for epoch, loss in enumerate(self.losses)]
