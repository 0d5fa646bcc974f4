import unittest

import numpy as np

from errors import DimensionError
from models.tensor import Tensor
from services.tensor.helpers.avg_pool_2x2 import avg_pool_2x2, avg_pool_2x2_grads


class TestAvgPool2x2(unittest.TestCase):
    # ───────────────────────────────────────────────────────────
    # SUCCESS CASES
    # ───────────────────────────────────────────────────────────
    def test_avg_pool_2x2_block_mean(self) -> None:
        """Verify the 2x2 block {1, 2, 3, 4} averages to 2.5."""
        x = Tensor(np.array([1.0, 2.0, 3.0, 4.0]).reshape(1, 1, 2, 2))

        assert avg_pool_2x2(x).data.item() == 2.5

    def test_avg_pool_2x2_halves_spatial_dims(self) -> None:
        """Verify [1,3,8,8] pools to [1,3,4,4]."""
        assert avg_pool_2x2(Tensor.zeros((1, 3, 8, 8))).shape == (1, 3, 4, 4)

    def test_avg_pool_2x2_preserves_global_mean(self) -> None:
        """Verify four times the pooled sum equals the input sum within 1e-12 relative."""
        x = Tensor(np.random.default_rng(5).standard_normal((2, 3, 8, 6)) + 0.5)

        pooled = float(np.sum(avg_pool_2x2(x).data)) * 4.0
        total = float(np.sum(x.data))

        assert abs(pooled - total) <= 1e-12 * max(abs(total), 1.0)

    def test_avg_pool_2x2_grads_spread_evenly(self) -> None:
        """Verify each output gradient is split into four equal parts."""
        x = Tensor.zeros((1, 1, 4, 4))
        grad = Tensor(np.array([[4.0, 8.0], [0.0, -4.0]]).reshape(1, 1, 2, 2))

        result = avg_pool_2x2_grads(x, grad).data[0, 0]

        assert np.array_equal(result[:2, :2], np.full((2, 2), 1.0))
        assert np.array_equal(result[:2, 2:], np.full((2, 2), 2.0))
        assert np.array_equal(result[2:, 2:], np.full((2, 2), -1.0))

    # ───────────────────────────────────────────────────────────
    # EDGE CASES
    # ───────────────────────────────────────────────────────────
    def test_avg_pool_2x2_odd_dims_raise(self) -> None:
        """Verify odd height or width raises DimensionError."""
        for shape in ((1, 3, 5, 4), (1, 3, 4, 7)):
            with self.subTest(shape=shape), self.assertRaises(DimensionError):
                avg_pool_2x2(Tensor.zeros(shape))

    def test_avg_pool_2x2_grads_shape_mismatch_raises(self) -> None:
        """Verify a gradient not shaped like the pooled output raises."""
        with self.assertRaises(DimensionError):
            avg_pool_2x2_grads(Tensor.zeros((1, 1, 4, 4)), Tensor.zeros((1, 1, 4, 4)))
