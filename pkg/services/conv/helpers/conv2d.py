from typing import Tuple

import numpy as np

from errors import ArgumentError, DimensionError
from models.conv_kernel import ConvKernel
from models.tensor import Tensor


def conv2d(input: Tensor, kernel: ConvKernel, dilation: int = 1) -> Tensor:  # noqa: A002
    """
    Dilated, bias-free 2-D cross-correlation with zero same-padding.

    The input is padded by dilation * (k - 1) / 2 per axis, then every kernel tap
    contributes one channel contraction of a shifted input window.

    Args:
        input: Tensor [n, in_ch, h, w].
        kernel: Filters [out_ch, in_ch, kh, kw] with odd kh, kw.
        dilation: Tap spacing, >= 1.

    Returns:
        Tensor [n, out_ch, h, w].

    Raises:
        DimensionError: If input channels differ from kernel in_ch.
        ArgumentError: If dilation < 1.
    """
    padded = _pad(input, kernel, dilation)
    n, _, h, w = input.shape
    weights = kernel.weights
    output = np.zeros((n, h, w, kernel.out_channels))

    for row in range(kernel.kh):
        for col in range(kernel.kw):
            window = padded[:, :, row * dilation : row * dilation + h, col * dilation : col * dilation + w]
            output += np.tensordot(window, weights[:, :, row, col], axes=([1], [1]))

    return Tensor(np.moveaxis(output, 3, 1))


def conv2d_grads(
    input: Tensor,  # noqa: A002
    kernel: ConvKernel,
    dilation: int,
    grad_output: Tensor,
) -> Tuple[Tensor, np.ndarray]:
    """
    Analytic gradients of `conv2d` with respect to its input and weights.

    Returns:
        (grad_input [n, in_ch, h, w], grad_weights [out_ch, in_ch, kh, kw]).

    Raises:
        DimensionError: If grad_output does not have the conv2d output shape.
    """
    padded = _pad(input, kernel, dilation)
    n, _, h, w = input.shape

    if grad_output.shape != (n, kernel.out_channels, h, w):
        expected = (n, kernel.out_channels, h, w)
        raise DimensionError(f"Gradient shape {grad_output.shape} differs from output shape {expected}")

    grad = np.moveaxis(grad_output.data, 1, 3)
    weights = kernel.weights
    grad_weights = np.zeros_like(weights)
    grad_padded = np.zeros_like(padded)

    for row in range(kernel.kh):
        for col in range(kernel.kw):
            rows = slice(row * dilation, row * dilation + h)
            cols = slice(col * dilation, col * dilation + w)
            grad_weights[:, :, row, col] = np.tensordot(grad, padded[:, :, rows, cols], axes=([0, 1, 2], [0, 2, 3]))
            spread = np.tensordot(grad, weights[:, :, row, col], axes=([3], [0]))
            grad_padded[:, :, rows, cols] += np.moveaxis(spread, 3, 1)

    pad_h, pad_w = padding(kernel, dilation)
    return Tensor(grad_padded[:, :, pad_h : pad_h + h, pad_w : pad_w + w]), grad_weights


def padding(kernel: ConvKernel, dilation: int) -> Tuple[int, int]:
    return dilation * (kernel.kh - 1) // 2, dilation * (kernel.kw - 1) // 2


def _pad(x: Tensor, kernel: ConvKernel, dilation: int) -> np.ndarray:
    if dilation < 1:
        raise ArgumentError(f"Dilation must be >= 1, got {dilation}")

    if x.c != kernel.in_channels:
        raise DimensionError(f"Input has {x.c} channels, kernel expects {kernel.in_channels}")

    pad_h, pad_w = padding(kernel, dilation)
    return np.pad(x.data, ((0, 0), (0, 0), (pad_h, pad_h), (pad_w, pad_w)))
