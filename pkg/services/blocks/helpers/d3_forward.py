from layers.d3_block import D3BlockLayer
from models.d3_config import D3Config
from models.d3_weights import D3Weights
from models.tensor import Tensor


def d3_forward(config: D3Config, input: Tensor, weights: D3Weights) -> Tensor:  # noqa: A002
    """Run a D3 block; the result is the reduced output of its last D2 block."""
    return D3BlockLayer("", config, weights).forward(input)
