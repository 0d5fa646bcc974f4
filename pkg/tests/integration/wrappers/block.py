import json
import unittest
from pathlib import Path
from typing import Any, Tuple

import numpy as np

from enums.norm_kind import NormKind
from models.tensor import Tensor
from services.logging import LoggingService
from services.weights import WeightsService


class BlockWrapper(unittest.TestCase):
    """
    Base class for tests that run real layers end to end.

    Provides seeded inputs and weight factories so every test builds its blocks
    the same way the services do.
    """

    # ───────────────────────────────────────────────────────────
    # PROPERTIES
    # ───────────────────────────────────────────────────────────
    _log: LoggingService

    # ───────────────────────────────────────────────────────────
    # CONSTRUCTOR
    # ───────────────────────────────────────────────────────────
    def setUp(self) -> None:
        super().setUp()
        self._log = LoggingService()
        self._log.setup(name=self.__class__.__name__)

    # ───────────────────────────────────────────────────────────
    # PUBLIC METHODS
    # ───────────────────────────────────────────────────────────
    def weights(self, seed: int = 0, norm_kind: NormKind = NormKind.BATCH) -> WeightsService:
        return WeightsService(seed=seed, norm_kind=norm_kind)

    def random_input(self, shape: Tuple[int, int, int, int], seed: int = 0) -> Tensor:
        return Tensor(np.random.default_rng(seed).standard_normal(shape))

    def get_json_data(self, path: str) -> Any:
        json_path = Path(__file__).parent.parent / "jsons" / path
        with json_path.open(encoding="utf-8") as f:
            return json.load(f)
