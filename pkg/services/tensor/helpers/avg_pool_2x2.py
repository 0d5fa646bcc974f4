import numpy as np

from configs.constants import POOL_SIZE
from errors import DimensionError
from models.tensor import Tensor


def avg_pool_2x2(input: Tensor) -> Tensor:  # noqa: A002
    """
    Non-overlapping 2×2 average pooling.

    Raises:
        DimensionError: If h or w is odd.
    """
    _check_even(input)
    n, c, h, w = input.shape
    blocks = input.data.reshape(n, c, h // POOL_SIZE, POOL_SIZE, w // POOL_SIZE, POOL_SIZE)
    return Tensor(blocks.mean(axis=(3, 5)))


def avg_pool_2x2_grads(input: Tensor, grad_output: Tensor) -> Tensor:  # noqa: A002
    """Spread each output gradient evenly over its 2×2 window."""
    _check_even(input)
    n, c, h, w = input.shape

    if grad_output.shape != (n, c, h // POOL_SIZE, w // POOL_SIZE):
        raise DimensionError(f"Gradient shape {grad_output.shape} does not match pooled input {input.shape}")

    spread = np.repeat(np.repeat(grad_output.data, POOL_SIZE, axis=2), POOL_SIZE, axis=3)
    return Tensor(spread / (POOL_SIZE * POOL_SIZE))


def _check_even(x: Tensor) -> None:
    if x.h % POOL_SIZE or x.w % POOL_SIZE:
        raise DimensionError(f"2x2 average pooling needs even spatial dims, got {x.h}x{x.w}")
