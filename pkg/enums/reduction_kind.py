from enum import Enum, unique


@unique
class ReductionKind(str, Enum):
    """Channel reduction applied at the output of each D2 block inside a D3 block."""

    COMPRESS = "compress"
    LAST_N = "last_n"
    NONE = "none"
