from enum import Enum, unique


@unique
class EdgeKind(str, Enum):
    """Annotation of a LayerGraph edge."""

    CONV = "conv"
    POINTWISE = "pointwise"
    POOL = "pool"
    SUBSAMPLE = "subsample"
    UPSAMPLE = "upsample"
