from typing import Tuple

import numpy as np

from enums.norm_kind import NormKind
from errors import DimensionError
from models.norm_params import NormParams
from models.tensor import Tensor

AXES = (0, 2, 3)


def composite_psi(input: Tensor, params: NormParams) -> Tensor:  # noqa: A002
    """
    ψ(x) = ReLU(normalize(x)) applied per channel.

    BATCH normalises with the batch mean and biased variance over (n, h, w);
    FIXED_AFFINE computes gamma * x + beta; IDENTITY returns the input unchanged.

    Args:
        input: Tensor [n, c, h, w].
        params: Per-channel gamma/beta of length c.

    Returns:
        Tensor with the same shape.

    Raises:
        DimensionError: If gamma/beta length differs from c.

    Example:
        >>> x = Tensor(np.full((1, 1, 2, 2), 3.0))
        >>> composite_psi(x, NormParams.neutral(1)).data.max()
        0.0
    """
    _, pre, _ = _normalize(input, params)

    if params.kind.has_relu():
        pre = np.maximum(pre, 0.0)

    return Tensor(pre)


def composite_psi_grads(
    input: Tensor,  # noqa: A002
    params: NormParams,
    grad_output: Tensor,
) -> Tuple[Tensor, np.ndarray, np.ndarray]:
    """
    Backward pass of `composite_psi`.

    The ReLU derivative at exactly zero is taken as zero.

    Returns:
        (grad_input, grad_gamma, grad_beta).
    """
    if grad_output.shape != input.shape:
        raise DimensionError(f"Gradient shape {grad_output.shape} differs from input shape {input.shape}")

    if params.kind is NormKind.IDENTITY:
        return grad_output, np.zeros_like(params.gamma), np.zeros_like(params.beta)

    xhat, pre, inv_std = _normalize(input, params)
    grad = grad_output.data * (pre > 0.0)

    grad_gamma = np.sum(grad * xhat, axis=AXES)
    grad_beta = np.sum(grad, axis=AXES)
    grad_xhat = grad * params.gamma.reshape(1, -1, 1, 1)

    if inv_std is None:
        return Tensor(grad_xhat), grad_gamma, grad_beta

    count = input.n * input.h * input.w
    grad_input = (inv_std / count) * (
        count * grad_xhat
        - np.sum(grad_xhat, axis=AXES, keepdims=True)
        - xhat * np.sum(grad_xhat * xhat, axis=AXES, keepdims=True)
    )
    return Tensor(grad_input), grad_gamma, grad_beta


def kink_margin(input: Tensor, params: NormParams) -> float:  # noqa: A002
    """Smallest |pre-activation| of ψ; infinite when ψ has no ReLU."""
    if not params.kind.has_relu():
        return float("inf")

    _, pre, _ = _normalize(input, params)
    return float(np.min(np.abs(pre)))


def _normalize(x: Tensor, params: NormParams) -> Tuple[np.ndarray, np.ndarray, "np.ndarray | None"]:
    if params.channels != x.c:
        raise DimensionError(f"Norm parameters cover {params.channels} channels, input has {x.c}")

    if params.kind is NormKind.IDENTITY:
        return x.data, x.data, None

    gamma = params.gamma.reshape(1, -1, 1, 1)
    beta = params.beta.reshape(1, -1, 1, 1)

    if params.kind is NormKind.FIXED_AFFINE:
        return x.data, gamma * x.data + beta, None

    mean = np.mean(x.data, axis=AXES, keepdims=True)
    var = np.var(x.data, axis=AXES, keepdims=True)
    inv_std = 1.0 / np.sqrt(var + params.eps)
    xhat = (x.data - mean) * inv_std
    return xhat, gamma * xhat + beta, inv_std
