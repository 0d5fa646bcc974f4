from errors import ConfigurationError
from layers.transition import TransitionLayer
from models.psi_conv_weights import PsiConvWeights
from models.tensor import Tensor


def transition(input: Tensor, weights: PsiConvWeights) -> Tensor:  # noqa: A002
    """
    ψ + 1×1 to floor(c / 2) channels, then 2×2 average pooling.

    Raises:
        DimensionError: On odd spatial dims.
        ConfigurationError: If the weights do not halve the channel count.
    """
    if weights.kernel.out_channels != input.c // 2:
        raise ConfigurationError(
            f"Transition weights emit {weights.kernel.out_channels} channels, expected {input.c // 2}"
        )

    return TransitionLayer("transition", weights).forward(input)
