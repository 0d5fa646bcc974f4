from enum import Enum, unique
from typing import List


@unique
class DilationMode(str, Enum):
    """
    Dilation assignment of the convolutions inside a D2 block.

    MULTI gives each source group its own factor 2^i (i = index of the layer the
    channels come from). STANDARD gives every channel of layer l the factor
    2^(l-1), the largest factor the MULTI layer would use. NONE keeps every
    convolution undilated.
    """

    MULTI = "multi"
    STANDARD = "standard"
    NONE = "none"

    def dilations(self, layer: int) -> List[int]:
        """
        Dilation factor per source group for a 1-based layer index.

        Args:
            layer: Layer index inside the D2 block, starting at 1.

        Returns:
            List with one factor per source group x_0 .. x_{layer-1}.

        Example:
            >>> DilationMode.MULTI.dilations(3)
            [1, 2, 4]
            >>> DilationMode.STANDARD.dilations(3)
            [4, 4, 4]
        """
        if self is DilationMode.MULTI:
            return [2**i for i in range(layer)]

        if self is DilationMode.STANDARD:
            return [2 ** (layer - 1)] * layer

        return [1] * layer

    def is_grouped(self) -> bool:
        return self is DilationMode.MULTI
