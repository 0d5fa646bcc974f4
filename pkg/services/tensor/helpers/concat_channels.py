from typing import List, Sequence

import numpy as np

from errors import DimensionError
from models.tensor import Tensor


def concat_channels(inputs: Sequence[Tensor]) -> Tensor:
    """
    Concatenate tensors along the channel axis, in order.

    Raises:
        DimensionError: If the list is empty or batch/spatial sizes differ.
    """
    if not inputs:
        raise DimensionError("Cannot concatenate an empty tensor list")

    n, _, h, w = inputs[0].shape

    for tensor in inputs:
        if (tensor.n, tensor.h, tensor.w) != (n, h, w):
            raise DimensionError(f"Cannot concatenate {tensor.shape} with batch/spatial size {(n, h, w)}")

    if len(inputs) == 1:
        return inputs[0]

    return Tensor(np.concatenate([tensor.data for tensor in inputs], axis=1))


def split_channels(tensor: Tensor, widths: Sequence[int]) -> List[Tensor]:
    """
    Inverse of `concat_channels` for the given channel widths.

    Raises:
        DimensionError: If the widths do not sum to the channel count.
    """
    if sum(widths) != tensor.c:
        raise DimensionError(f"Widths {list(widths)} do not sum to {tensor.c} channels")

    offsets = np.cumsum([0, *widths])
    return [Tensor(tensor.data[:, offsets[i] : offsets[i + 1]]) for i in range(len(widths))]
