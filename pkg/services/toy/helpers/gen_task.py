import numpy as np

from errors import ArgumentError
from models.toy_task import MARKER_CHANNEL, NOISE_CHANNEL, ToyTask


def gen_task(seed: int, length: int, distance: int, count: int) -> ToyTask:
    """
    Long-range labelling task along the height axis.

    Channel 0 carries noise z ~ N(0, 1) and channel 1 a marker m ~ Bernoulli(0.5)
    encoded as 2m - 1. With s = [z > 0], the label at p is
    s[p-1] ^ s[p] ^ s[p+1] ^ m[p-D], where out-of-range positions contribute 0.

    Args:
        seed: Generator seed.
        length: Sequence length n.
        distance: Marker distance D, 0 <= D < n / 2.
        count: Number of samples.

    Returns:
        ToyTask with inputs [count, 2, n, 1] and targets [count, 1, n, 1].

    Raises:
        ArgumentError: On a negative or too large distance, or non-positive sizes.
    """
    if length < 1 or count < 1:
        raise ArgumentError(f"Length and count must be positive, got n={length}, count={count}")

    if distance < 0 or 2 * distance >= length:
        raise ArgumentError(f"Marker distance must satisfy 0 <= D < n / 2, got D={distance}, n={length}")

    rng = np.random.default_rng(seed)
    noise = rng.standard_normal((count, length))
    markers = rng.integers(0, 2, size=(count, length))

    signs = np.pad((noise > 0).astype(np.int64), ((0, 0), (1, 1)))
    labels = signs[:, :-2] ^ signs[:, 1:-1] ^ signs[:, 2:]
    shifted = np.zeros_like(markers)
    shifted[:, distance:] = markers[:, : length - distance]
    labels ^= shifted

    inputs = np.zeros((count, 2, length, 1))
    inputs[:, NOISE_CHANNEL, :, 0] = noise
    inputs[:, MARKER_CHANNEL, :, 0] = 2.0 * markers - 1.0

    return ToyTask(
        seed=seed,
        length=length,
        distance=distance,
        inputs=inputs,
        targets=labels.astype(np.float64).reshape(count, 1, length, 1),
    )
