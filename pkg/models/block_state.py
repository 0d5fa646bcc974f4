from __future__ import annotations

from typing import List

from pydantic import BaseModel, ConfigDict

from models.tensor import Tensor
from services.tensor.helpers.concat_channels import concat_channels


class BlockState(BaseModel):
    """
    Block input x_0 and per-layer outputs x_1 .. x_L of one D2 forward pass.

    Layer l consumed exactly concat([x_0 .. x_{l-1}]).
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    x0: Tensor
    outputs: List[Tensor]

    def layer(self, index: int) -> Tensor:
        """x_index for 0 <= index <= L."""
        return self.x0 if index == 0 else self.outputs[index - 1]

    def last(self, count: int) -> Tensor:
        return concat_channels(self.outputs[-count:])

    def concat(self) -> Tensor:
        return concat_channels([self.x0, *self.outputs])

    @property
    def depth(self) -> int:
        return len(self.outputs)
