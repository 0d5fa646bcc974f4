from typing import Any, Dict

STEM = {"in_channels": 3, "channels": [64, 64], "kernel": 3, "strides": [2, 1]}

PRESETS: Dict[str, Dict[str, Any]] = {
    "d3net_s": {
        "type": "backbone",
        "stem": STEM,
        "scales": [{"M": 4, "L": 8, "k": 36, "B": 144, "c": 0.2}] * 4,
        "extract": [32, 40, 64, 128],
    },
    "d3net_l": {
        "type": "backbone",
        "stem": STEM,
        "scales": [{"M": 4, "L": 10, "k": 64, "B": 256, "c": 0.2}] * 4,
        "extract": [32, 48, 96, 192],
    },
}

# Published totals the presets are compared against.
REFERENCE_PARAMS: Dict[str, int] = {
    "d3net_s": 9_700_000,
    "d3net_l": 38_700_000,
}
