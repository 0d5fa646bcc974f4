from __future__ import annotations

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class ParameterModel(BaseModel):
    """Trainable array and the gradient slot the owning layer writes on backward."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    name: str
    value: np.ndarray
    grad: np.ndarray = Field(default_factory=lambda: np.zeros(0))

    def model_post_init(self, __context: object) -> None:
        if self.grad.shape != self.value.shape:
            self.grad = np.zeros_like(self.value)

    @property
    def layer(self) -> str:
        """Owning layer path, i.e. the name without its last component."""
        return self.name.rsplit(".", 1)[0]

    @property
    def size(self) -> int:
        return int(self.value.size)
