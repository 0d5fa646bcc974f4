import math
from fractions import Fraction


def get_compressed_width(ratio: float, channels: int) -> int:
    """
    Exact floor(ratio * channels) for a compression ratio.

    The ratio is read through its shortest decimal form, so 0.57 * 100 is 57
    rather than the 56 a binary float product floors to.

    Example:
        >>> get_compressed_width(0.57, 100)
        57
    """
    return math.floor(Fraction(str(ratio)) * channels)
