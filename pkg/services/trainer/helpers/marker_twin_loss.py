import numpy as np

from interfaces.layer import LayerInterface
from models.tensor import Tensor
from models.toy_task import ToyTask


def marker_twin_loss(model: LayerInterface, task: ToyTask) -> float:
    """
    Mean squared error over marker-flipped twin pairs.

    For every position p >= D the sample is paired with a copy whose marker at
    p - D is negated, which flips the label at p. A model whose output at p does
    not depend on input p - D predicts the same value for both members, so its
    loss on the pair is at least 0.25.
    """
    inputs = Tensor(task.inputs)
    original = model.forward(inputs).data[:, 0, :, 0]
    targets = task.targets[:, 0, :, 0]
    losses = []

    for position in range(task.distance, task.length):
        twin = model.forward(task.with_marker_flipped(position - task.distance)).data[:, 0, position, 0]
        target = targets[:, position]
        pair = ((original[:, position] - target) ** 2 + (twin - (1.0 - target)) ** 2) / 2.0
        losses.append(pair)

    return float(np.mean(np.stack(losses)))
