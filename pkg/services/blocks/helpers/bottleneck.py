from typing import Optional

from errors import ConfigurationError
from layers.psi_conv import PsiConvLayer
from models.psi_conv_weights import PsiConvWeights
from models.tensor import Tensor


def bottleneck(input: Tensor, B: int, weights: Optional[PsiConvWeights]) -> Tensor:  # noqa: A002
    """
    ψ + 1×1 convolution to B channels when the input is wider than B, identity otherwise.

    Raises:
        ConfigurationError: If a bottleneck is needed but no weights are given.
    """
    if input.c <= B:
        return input

    if weights is None:
        raise ConfigurationError(f"Bottleneck from {input.c} to {B} channels needs weights")

    layer = PsiConvLayer("bottleneck", weights)

    if layer.out_channels != B:
        raise ConfigurationError(f"Bottleneck weights emit {layer.out_channels} channels, expected {B}")

    return layer.forward(input)
