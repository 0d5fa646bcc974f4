from __future__ import annotations

from typing import Any, Dict

from pydantic import BaseModel, ConfigDict, Field

from configs.constants import DEFAULT_TOY_COUNT, DEFAULT_TOY_LENGTH
from models.optimizer_config import OptimizerConfig


class ToyJobModel(BaseModel):
    """One (config, task, optimizer, seed) training run; picklable for worker processes."""

    model_config = ConfigDict(frozen=True)

    run_id: str
    config: Dict[str, Any]
    distance: int = Field(ge=0)
    length: int = Field(default=DEFAULT_TOY_LENGTH, ge=1)
    count: int = Field(default=DEFAULT_TOY_COUNT, ge=1)
    seed: int = 0
    optimizer: OptimizerConfig = Field(default_factory=OptimizerConfig)
