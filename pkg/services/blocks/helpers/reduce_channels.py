from typing import Optional

from enums.reduction_kind import ReductionKind
from errors import ConfigurationError
from helpers.get_compressed_width import get_compressed_width
from layers.psi_conv import PsiConvLayer
from models.block_state import BlockState
from models.psi_conv_weights import PsiConvWeights
from models.reduction import ReductionPolicy
from models.tensor import Tensor


def reduce_channels(
    block_output: Tensor,
    state: BlockState,
    policy: ReductionPolicy,
    weights: Optional[PsiConvWeights] = None,
) -> Tensor:
    """
    Shrink a D2 output before it joins the D3 concatenation.

    Compress(c) maps the m channels to floor(c * m) with ψ + 1×1; LastN(N)
    returns concat(x_{L-N+1} .. x_L); None is the identity.

    Raises:
        ConfigurationError: If floor(c * m) is zero, N exceeds the block depth, or
            compression weights are missing or mis-shaped.
    """
    if policy.kind is ReductionKind.LAST_N:
        count = policy.n or 0

        if count > state.depth:
            raise ConfigurationError(f"LastN({count}) on a block of depth {state.depth}")

        return state.last(count)

    if policy.kind is ReductionKind.NONE:
        return block_output

    width = get_compressed_width(policy.c or 0.0, block_output.c)

    if width == 0:
        raise ConfigurationError(f"Compression c={policy.c} of {block_output.c} channels leaves zero channels")

    if weights is None:
        raise ConfigurationError("Compress reduction needs weights")

    layer = PsiConvLayer("compress", weights)

    if layer.out_channels != width:
        raise ConfigurationError(f"Compression weights emit {layer.out_channels} channels, expected {width}")

    return layer.forward(block_output)
