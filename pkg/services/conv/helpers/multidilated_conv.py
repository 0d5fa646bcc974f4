from typing import List, Optional, Tuple

import numpy as np

from errors import DimensionError
from models.multi_dilated_kernel import MultiDilatedKernel
from models.tensor import Tensor
from services.conv.helpers.conv2d import conv2d, conv2d_grads


def multidilated_conv(input: Tensor, kernel: MultiDilatedKernel) -> Tensor:  # noqa: A002
    """
    Sum over channel groups of a dilated convolution of the group's slice.

    Each group is same-padded with its own dilation, so every summand has the
    output shape [n, out_ch, h, w].

    Raises:
        ConfigurationError: If the groups do not tile the input channels.
    """
    kernel.check(input.c)
    total: Optional[np.ndarray] = None

    for group, group_kernel in zip(kernel.groups, kernel.kernels, strict=True):
        part = conv2d(_slice(input, group.channel_start, group.channel_end), group_kernel, group.dilation).data
        total = part if total is None else total + part

    assert total is not None
    return Tensor(total)


def multidilated_grads(
    input: Tensor,  # noqa: A002
    kernel: MultiDilatedKernel,
    grad_output: Tensor,
) -> Tuple[Tensor, List[np.ndarray]]:
    """
    Analytic gradients of `multidilated_conv`.

    Returns:
        (grad_input assembled by channel group, per-group grad_weights).
    """
    kernel.check(input.c)

    if grad_output.c != kernel.out_channels:
        raise DimensionError(f"Gradient has {grad_output.c} channels, kernel emits {kernel.out_channels}")

    grad_input = np.zeros(input.shape)
    grad_weights: List[np.ndarray] = []

    for group, group_kernel in zip(kernel.groups, kernel.kernels, strict=True):
        part = _slice(input, group.channel_start, group.channel_end)
        grad_part, grad_kernel = conv2d_grads(part, group_kernel, group.dilation, grad_output)
        grad_input[:, group.channel_start : group.channel_end] = grad_part.data
        grad_weights.append(grad_kernel)

    return Tensor(grad_input), grad_weights


def _slice(x: Tensor, start: int, end: int) -> Tensor:
    if start == 0 and end == x.c:
        return x

    return x.channels(start, end)
