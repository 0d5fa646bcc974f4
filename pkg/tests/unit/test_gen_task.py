import unittest

import numpy as np

from errors import ArgumentError
from models.toy_task import MARKER_CHANNEL, NOISE_CHANNEL
from services.toy.helpers.gen_task import gen_task


class TestGenTask(unittest.TestCase):
    # ───────────────────────────────────────────────────────────
    # CONSTANTS
    # ───────────────────────────────────────────────────────────
    _LENGTH: int = 64
    _DISTANCE: int = 20
    _COUNT: int = 256

    # ───────────────────────────────────────────────────────────
    # SUCCESS CASES
    # ───────────────────────────────────────────────────────────
    def test_gen_task_shapes(self) -> None:
        """Verify n=64, D=20, count=256 gives the documented shapes."""
        task = gen_task(0, self._LENGTH, self._DISTANCE, self._COUNT)

        assert task.inputs.shape == (self._COUNT, 2, self._LENGTH, 1)
        assert task.targets.shape == (self._COUNT, 1, self._LENGTH, 1)
        assert task.count == self._COUNT
        assert set(np.unique(task.targets).tolist()) <= {0.0, 1.0}
        assert set(np.unique(task.inputs[:, MARKER_CHANNEL]).tolist()) <= {-1.0, 1.0}

    def test_gen_task_is_deterministic(self) -> None:
        """Verify equal seeds give bit-identical datasets and different seeds do not."""
        first = gen_task(3, self._LENGTH, self._DISTANCE, 16)
        second = gen_task(3, self._LENGTH, self._DISTANCE, 16)
        other = gen_task(4, self._LENGTH, self._DISTANCE, 16)

        assert np.array_equal(first.inputs, second.inputs)
        assert np.array_equal(first.targets, second.targets)
        assert not np.array_equal(first.inputs, other.inputs)

    def test_gen_task_labels_follow_rule(self) -> None:
        """Verify labels are the local sign parity XOR the marker D positions back."""
        task = gen_task(1, 32, 5, 8)
        signs = (task.inputs[:, NOISE_CHANNEL, :, 0] > 0).astype(int)
        markers = (task.inputs[:, MARKER_CHANNEL, :, 0] > 0).astype(int)

        for sample in range(8):
            for position in range(32):
                with self.subTest(sample=sample, position=position):
                    local = [signs[sample, q] for q in (position - 1, position, position + 1) if 0 <= q < 32]
                    marker = markers[sample, position - 5] if position >= 5 else 0
                    expected = (sum(local) + marker) % 2

                    assert task.targets[sample, 0, position, 0] == expected

    def test_gen_task_zero_distance_is_local(self) -> None:
        """Verify D=0 labels depend only on the window {p-1, p, p+1}."""
        task = gen_task(2, 16, 0, 4)
        flipped = task.with_marker_flipped(10).data
        signs = np.pad((flipped[:, NOISE_CHANNEL, :, 0] > 0).astype(int), ((0, 0), (1, 1)))
        markers = (flipped[:, MARKER_CHANNEL, :, 0] > 0).astype(int)
        relabelled = (signs[:, :-2] + signs[:, 1:-1] + signs[:, 2:] + markers) % 2

        changed = np.flatnonzero(np.any(relabelled != task.targets[:, 0, :, 0], axis=0)).tolist()

        assert changed == [10]

    # ───────────────────────────────────────────────────────────
    # EDGE CASES
    # ───────────────────────────────────────────────────────────
    def test_gen_task_distance_too_large_raises(self) -> None:
        """Verify D >= n / 2 and negative D raise ArgumentError."""
        for distance in (32, 40, -1):
            with self.subTest(distance=distance), self.assertRaises(ArgumentError):
                gen_task(0, self._LENGTH, distance, 4)
