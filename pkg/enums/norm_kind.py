from enum import Enum, unique


@unique
class NormKind(str, Enum):
    """
    Normalisation used by the composite ψ operation.

    BATCH normalises with current-batch statistics. FIXED_AFFINE applies
    gamma * x + beta without statistics, so every output position depends only
    on its own receptive field. IDENTITY skips normalisation and the ReLU, and
    is only used by the impulse-footprint oracle.
    """

    BATCH = "batch"
    FIXED_AFFINE = "fixed_affine"
    IDENTITY = "identity"

    def has_relu(self) -> bool:
        return self is not NormKind.IDENTITY
