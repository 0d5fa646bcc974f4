import math
from typing import Callable, Tuple

import numpy as np

from configs.constants import GRAD_CHECK_EPS
from errors import ArgumentError, NumericError
from models.tensor import Tensor


def finite_diff_grad(f: Callable[[Tensor], float], x: Tensor, eps: float = GRAD_CHECK_EPS) -> Tensor:
    """
    Central-difference gradient of a scalar function of a tensor.

    Args:
        f: Scalar map.
        x: Point of evaluation.
        eps: Step, > 0.

    Returns:
        Tensor of (f(x + eps e_i) - f(x - eps e_i)) / (2 eps) per element.

    Raises:
        ArgumentError: If eps <= 0.
        NumericError: If f returns a non-finite value.

    Example:
        f(x) = sum(x ** 2) at x = [3] gives approximately 6.0.
    """
    values = np.array(x.data)
    grad = finite_diff_array(lambda: f(Tensor(values)), values, eps)
    return Tensor(grad)


def finite_diff_array(f: Callable[[], float], array: np.ndarray, eps: float = GRAD_CHECK_EPS) -> np.ndarray:
    """
    Central differences of `f` with respect to an array it reads, perturbed in place.

    Every element is restored to its original value before the next one is
    perturbed.
    """
    if eps <= 0:
        raise ArgumentError(f"Finite-difference step must be positive, got {eps}")

    grad = np.zeros_like(array)

    for index in np.ndindex(array.shape):
        original = array[index]

        array[index] = original + eps
        plus = _finite(f(), index)
        array[index] = original - eps
        minus = _finite(f(), index)
        array[index] = original

        grad[index] = (plus - minus) / (2.0 * eps)

    return grad


def _finite(value: float, index: Tuple[int, ...]) -> float:
    if not math.isfinite(value):
        raise NumericError(f"Non-finite function value {value} at element {index}")

    return value
