from typing import Tuple

from layers.d2_block import D2BlockLayer
from models.block_state import BlockState
from models.d2_config import D2Config
from models.d2_weights import D2Weights
from models.tensor import Tensor


def d2_forward(config: D2Config, input: Tensor, weights: D2Weights) -> Tuple[Tensor, BlockState]:  # noqa: A002
    """
    Run one D2 block.

    Returns:
        (concat([x_0 .. x_L]), per-layer state).

    Raises:
        ConfigurationError: If the weights or input width disagree with `config`.
    """
    block = D2BlockLayer("", config, weights)
    output = block.forward(input)
    return output, block.state
