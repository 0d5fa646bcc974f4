from typing import Optional, Tuple

import numpy as np

from interfaces.layer import LayerInterface
from models.tensor import Tensor
from services.tensor.helpers.bilinear_matrix import bilinear_matrix


class UpsampleLayer(LayerInterface):
    """Separable bilinear resize to a fixed (h, w), align_corners = False."""

    # ───────────────────────────────────────────────────────────
    # PROPERTIES
    # ───────────────────────────────────────────────────────────
    _name: str
    _size: Tuple[int, int]
    _rows: Optional[np.ndarray]
    _cols: Optional[np.ndarray]

    # ───────────────────────────────────────────────────────────
    # CONSTRUCTOR
    # ───────────────────────────────────────────────────────────
    def __init__(self, name: str, size: Tuple[int, int]) -> None:
        self._name = name
        self._size = size
        self._rows = None
        self._cols = None

    # ───────────────────────────────────────────────────────────
    # PUBLIC METHODS
    # ───────────────────────────────────────────────────────────
    def forward(self, input: Tensor) -> Tensor:  # noqa: A002
        self._rows = bilinear_matrix(input.h, self._size[0])
        self._cols = bilinear_matrix(input.w, self._size[1])
        return Tensor(np.einsum("Hh,nchw,Ww->ncHW", self._rows, input.data, self._cols))

    def backward(self, grad_output: Tensor) -> Tensor:
        if self._rows is None or self._cols is None:
            raise RuntimeError(f"{self._name}: backward called before forward")

        return Tensor(np.einsum("Hh,ncHW,Ww->nchw", self._rows, grad_output.data, self._cols))
