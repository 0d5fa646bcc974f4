from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from configs.constants import DEFAULT_BATCH_SIZE, DEFAULT_LEARNING_RATE, DEFAULT_MOMENTUM


class OptimizerConfig(BaseModel):
    """
    SGD with momentum.

    `poly_power` enables the polynomial schedule lr * (1 - epoch / epochs) ** power.
    """

    model_config = ConfigDict(frozen=True)

    lr: float = Field(default=DEFAULT_LEARNING_RATE, ge=0)
    momentum: float = Field(default=DEFAULT_MOMENTUM, ge=0, lt=1)
    epochs: int = Field(default=200, ge=1)
    batch_size: int = Field(default=DEFAULT_BATCH_SIZE, ge=1)
    weight_decay: float = Field(default=0.0, ge=0)
    poly_power: Optional[float] = Field(default=None, gt=0)

    def learning_rate(self, epoch: int) -> float:
        """Rate used during 0-based `epoch`."""
        if self.poly_power is None:
            return self.lr

        return self.lr * (1.0 - epoch / self.epochs) ** self.poly_power
