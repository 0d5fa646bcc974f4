from __future__ import annotations

from typing import Any, Dict, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from errors import DimensionError

RANK = 4


class Tensor(BaseModel):
    """
    Dense rank-4 float64 array laid out as [batch, channel, height, width].

    A width of 1 degenerates to a 1-D signal along the height axis. The data is
    copied on construction and marked read-only, so a Tensor never changes after
    it has been built and can be shared freely.

    Attributes:
        data: Read-only float64 array of shape (n, c, h, w), all dimensions >= 1.
    """

    # ───────────────────────────────────────────────────────────
    # PROPERTIES
    # ───────────────────────────────────────────────────────────
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)
    data: np.ndarray

    # ───────────────────────────────────────────────────────────
    # CONSTRUCTOR
    # ───────────────────────────────────────────────────────────
    def __init__(self, data: Any, **kwargs: Any) -> None:
        array = np.array(data, dtype=np.float64)

        if array.ndim != RANK:
            raise DimensionError(f"Tensor must be rank {RANK} [n, c, h, w], got shape {array.shape}")

        if min(array.shape) < 1:
            raise DimensionError(f"Tensor dimensions must all be >= 1, got shape {array.shape}")

        array.setflags(write=False)
        super().__init__(data=array, **kwargs)

    # ───────────────────────────────────────────────────────────
    # PUBLIC METHODS
    # ───────────────────────────────────────────────────────────
    @classmethod
    def zeros(cls, shape: Tuple[int, int, int, int]) -> Tensor:
        return cls(np.zeros(shape))

    def channels(self, start: int, end: int) -> Tensor:
        if not 0 <= start < end <= self.c:
            raise DimensionError(f"Channel range [{start}, {end}) is outside [0, {self.c})")

        return Tensor(self.data[:, start:end])

    def equals(self, other: Tensor) -> bool:
        """Bit-exact comparison of shape and values."""
        return self.shape == other.shape and bool(np.array_equal(self.data, other.data))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "shape": list(self.shape),
            "data": self.data.ravel().tolist(),
        }

    # ───────────────────────────────────────────────────────────
    # GETTERS
    # ───────────────────────────────────────────────────────────
    @property
    def shape(self) -> Tuple[int, int, int, int]:
        n, c, h, w = self.data.shape
        return (n, c, h, w)

    @property
    def n(self) -> int:
        return self.shape[0]

    @property
    def c(self) -> int:
        return self.shape[1]

    @property
    def h(self) -> int:
        return self.shape[2]

    @property
    def w(self) -> int:
        return self.shape[3]
