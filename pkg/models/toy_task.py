from __future__ import annotations

from typing import Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from models.tensor import Tensor

NOISE_CHANNEL = 0
MARKER_CHANNEL = 1


class ToyTask(BaseModel):
    """
    Long-range dense-prediction dataset.

    Attributes:
        seed: Generator seed.
        length: Sequence length n along the height axis.
        distance: Marker distance D.
        inputs: Array [count, 2, n, 1]; channel 0 noise, channel 1 marker as +-1.
        targets: Array [count, 1, n, 1] of 0/1 labels.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    seed: int
    length: int = Field(ge=1)
    distance: int = Field(ge=0)
    inputs: np.ndarray
    targets: np.ndarray

    def sample(self, index: int) -> Tuple[Tensor, Tensor]:
        return Tensor(self.inputs[index : index + 1]), Tensor(self.targets[index : index + 1])

    def batch(self, indices: Sequence[int]) -> Tuple[Tensor, Tensor]:
        selection = np.asarray(indices, dtype=np.int64)
        return Tensor(self.inputs[selection]), Tensor(self.targets[selection])

    def with_marker_flipped(self, position: int) -> Tensor:
        """All inputs with the marker at `position` negated."""
        flipped = np.array(self.inputs)
        flipped[:, MARKER_CHANNEL, position, :] *= -1.0
        return Tensor(flipped)

    @property
    def count(self) -> int:
        return int(self.inputs.shape[0])
