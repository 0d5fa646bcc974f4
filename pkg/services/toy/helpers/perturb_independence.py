from typing import Sequence

import numpy as np

from errors import ArgumentError
from interfaces.layer import LayerInterface
from models.tensor import Tensor

PERTURBATION_SCALE = 4.0


def perturb_independence(
    model: LayerInterface,
    input: Tensor,  # noqa: A002
    position: int,
    region: Sequence[int],
    trials: int = 4,
    seed: int = 0,
) -> bool:
    """
    Whether the output at `position` ignores the inputs at `region`.

    Every trial adds seeded noise of scale 4 to all channels of the rows in
    `region` and compares the output row at `position` bit for bit.

    Args:
        model: Layer under test; must not couple positions through batch statistics.
        input: Base input [n, c, h, w]; positions run along h.
        position: Output row to watch.
        region: Input rows to perturb.
        trials: Number of random perturbations.
        seed: Perturbation seed.

    Returns:
        True iff every trial leaves the watched row unchanged; always True for an empty region.

    Raises:
        ArgumentError: If `position` or a region row is outside [0, h).
    """
    if not 0 <= position < input.h:
        raise ArgumentError(f"Position {position} is outside [0, {input.h})")

    rows = sorted(set(region))

    if not rows:
        return True

    if rows[0] < 0 or rows[-1] >= input.h:
        raise ArgumentError(f"Region {rows[0]}..{rows[-1]} is outside [0, {input.h})")

    reference = model.forward(input).data[:, :, position, :].copy()
    rng = np.random.default_rng(seed)

    for _ in range(trials):
        perturbed = np.array(input.data)
        perturbed[:, :, rows, :] += PERTURBATION_SCALE * rng.standard_normal(perturbed[:, :, rows, :].shape)

        if not np.array_equal(model.forward(Tensor(perturbed)).data[:, :, position, :], reference):
            return False

    return True
