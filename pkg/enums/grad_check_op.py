from enum import Enum, unique
from typing import Tuple


@unique
class GradCheckOp(str, Enum):
    """Operations registered with the finite-difference gradient checker."""

    CONV2D = "conv2d"
    MULTIDILATED_CONV = "multidilated_conv"
    COMPOSITE_PSI = "composite_psi"
    AVG_POOL = "avg_pool"
    D2_FORWARD = "d2_forward"
    D3_FORWARD = "d3_forward"
    D3_FORWARD_LAST_N = "d3_forward_last_n"

    def blocks(self) -> Tuple[str, ...]:
        """
        Parameter blocks whose gradients can be checked for this operation.

        Returns:
            Tuple of block names, "input" always first.
        """
        if self is GradCheckOp.AVG_POOL:
            return ("input",)

        if self is GradCheckOp.COMPOSITE_PSI:
            return ("input", "gamma", "beta")

        return ("input", "weights")

    def is_composite(self) -> bool:
        return self in (GradCheckOp.D2_FORWARD, GradCheckOp.D3_FORWARD, GradCheckOp.D3_FORWARD_LAST_N)
