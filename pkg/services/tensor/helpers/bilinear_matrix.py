import math

import numpy as np


def bilinear_matrix(in_size: int, out_size: int) -> np.ndarray:
    """
    Row-stochastic [out_size, in_size] interpolation matrix, align_corners = False.

    Source coordinate of output i is (i + 0.5) * in / out - 0.5, clamped at 0;
    the two neighbours floor(x) and min(floor(x) + 1, in - 1) are weighted by
    1 - frac and frac.

    Example:
        >>> bilinear_matrix(2, 4)[1].tolist()
        [0.75, 0.25]
    """
    matrix = np.zeros((out_size, in_size))
    scale = in_size / out_size

    for index in range(out_size):
        source = max((index + 0.5) * scale - 0.5, 0.0)
        low = min(math.floor(source), in_size - 1)
        high = min(low + 1, in_size - 1)
        weight = source - low
        matrix[index, low] += 1.0 - weight
        matrix[index, high] += weight

    return matrix
