import numpy as np

from enums.dilation_mode import DilationMode
from errors import ConfigurationError, DimensionError
from layers.d2_block import D2BlockLayer
from layers.d3_block import D3BlockLayer
from models.d2_config import D2Config
from models.d3_config import D3Config
from models.reduction import ReductionPolicy
from models.tensor import Tensor
from services.blocks.helpers.bottleneck import bottleneck
from services.blocks.helpers.d2_forward import d2_forward
from services.blocks.helpers.d3_forward import d3_forward
from services.blocks.helpers.reduce_channels import reduce_channels
from services.blocks.helpers.transition import transition
from tests.integration.wrappers.block import BlockWrapper


class TestBlocks(BlockWrapper):
    # ───────────────────────────────────────────────────────────
    # CONSTANTS
    # ───────────────────────────────────────────────────────────
    _SPATIAL: int = 16

    # ───────────────────────────────────────────────────────────
    # D2 BLOCKS
    # ───────────────────────────────────────────────────────────
    def test_d2_single_layer_is_mode_independent(self) -> None:
        """Verify L=1 gives bit-identical outputs in every dilation mode."""
        x = self.random_input((2, 4, self._SPATIAL, self._SPATIAL), seed=1)
        outputs = []

        for mode in DilationMode:
            config = D2Config(L=1, k=3, in_channels=4, mode=mode)
            output, _ = d2_forward(config, x, self.weights(seed=7).d2(config))
            outputs.append(output)

        for mode, output in zip(list(DilationMode)[1:], outputs[1:], strict=True):
            with self.subTest(mode=mode):
                assert output.equals(outputs[0])

    def test_d2_output_concatenates_every_layer(self) -> None:
        """Verify c0=3, L=3, k=2 emits 9 channels with x0 passed through untouched."""
        config = D2Config(L=3, k=2, in_channels=3)
        x = self.random_input((2, 3, self._SPATIAL, self._SPATIAL))

        output, state = d2_forward(config, x, self.weights().d2(config))

        assert output.shape == (2, 9, self._SPATIAL, self._SPATIAL)
        assert output.channels(0, 3).equals(x)
        assert state.depth == 3

        for layer in range(1, 4):
            with self.subTest(layer=layer):
                start = 3 + (layer - 1) * 2
                assert state.layer(layer).shape == (2, 2, self._SPATIAL, self._SPATIAL)
                assert output.channels(start, start + 2).equals(state.layer(layer))

    def test_d2_multi_groups_follow_sources(self) -> None:
        """Verify layer 3 convolves x0, x1 and x2 with dilations 1, 2 and 4."""
        config = D2Config(L=3, k=2, in_channels=3)
        block = D2BlockLayer("d2", config, self.weights().d2(config))

        groups = block.layers[2].groups

        assert [(group.channel_start, group.channel_end) for group in groups] == [(0, 3), (3, 5), (5, 7)]
        assert [group.dilation for group in groups] == [1, 2, 4]

    def test_d2_rejects_wrong_input_width(self) -> None:
        """Verify a block configured for 3 channels refuses a 4-channel input."""
        config = D2Config(L=2, k=2, in_channels=3)

        with self.assertRaises(ConfigurationError):
            d2_forward(config, self.random_input((1, 4, 8, 8)), self.weights().d2(config))

    # ───────────────────────────────────────────────────────────
    # D3 BLOCKS
    # ───────────────────────────────────────────────────────────
    def test_d3_single_block_matches_d2(self) -> None:
        """Verify M=1 without bottleneck or reduction is the plain D2 block."""
        inner = D2Config(L=3, k=2, in_channels=4)
        config = D3Config(M=1, inner=inner)
        x = self.random_input((2, 4, self._SPATIAL, self._SPATIAL), seed=2)

        d2_output, _ = d2_forward(inner, x, self.weights(seed=5).d2(inner))
        d3_output = d3_forward(config, x, self.weights(seed=5).d3(config))

        assert d3_output.equals(d2_output)

    def test_d3_output_width_follows_plan(self) -> None:
        """Verify the D3 output has the width of the last planned block."""
        config = D3Config(
            M=3,
            inner=D2Config(L=2, k=2, in_channels=6),
            B=8,
            reduction=ReductionPolicy.compress(0.5),
        )
        x = self.random_input((1, 6, 8, 8))

        output = d3_forward(config, x, self.weights().d3(config))

        assert output.shape == (1, config.out_channels, 8, 8)
        assert config.out_channels == 6

    def test_d3_backward_fills_every_gradient(self) -> None:
        """Verify backward returns an input-shaped gradient and writes every parameter gradient."""
        config = D3Config(
            M=2,
            inner=D2Config(L=2, k=2, in_channels=10),
            B=8,
            reduction=ReductionPolicy.compress(0.5),
        )
        block = D3BlockLayer("d3", config, self.weights().d3(config))
        x = self.random_input((2, 10, 6, 6))

        output = block.forward(x)
        grad_input = block.backward(Tensor(np.ones(output.shape)))

        assert grad_input.shape == x.shape
        assert bool(np.all(np.isfinite(grad_input.data)))

        for parameter in block.parameters():
            with self.subTest(parameter=parameter.name):
                assert parameter.grad.shape == parameter.value.shape
                assert bool(np.all(np.isfinite(parameter.grad)))

    # ───────────────────────────────────────────────────────────
    # BOTTLENECK AND REDUCTION
    # ───────────────────────────────────────────────────────────
    def test_bottleneck_narrows_wide_inputs(self) -> None:
        """Verify 200 channels with B=144 become 144 and 100 channels pass through."""
        wide = self.random_input((1, 200, 4, 4))
        narrow = self.random_input((1, 100, 4, 4))

        assert bottleneck(wide, 144, self.weights().psi_conv(200, 144)).shape == (1, 144, 4, 4)
        assert bottleneck(narrow, 144, None).equals(narrow)

    def test_bottleneck_to_single_channel(self) -> None:
        """Verify B=1 on a 2-channel input emits one channel."""
        x = self.random_input((1, 2, 4, 4))

        assert bottleneck(x, 1, self.weights().psi_conv(2, 1)).shape == (1, 1, 4, 4)

    def test_reduce_channels_policies(self) -> None:
        """Verify compress, LastN and None on a 100-channel D2 output."""
        config = D2Config(L=2, k=5, in_channels=90)
        output, state = d2_forward(config, self.random_input((1, 90, 4, 4)), self.weights().d2(config))

        compressed = reduce_channels(output, state, ReductionPolicy.compress(0.2), self.weights().psi_conv(100, 20))
        last = reduce_channels(output, state, ReductionPolicy.last_n(2))
        kept = reduce_channels(output, state, ReductionPolicy.none())

        assert compressed.shape == (1, 20, 4, 4)
        assert last.shape == (1, 10, 4, 4)
        assert last.equals(output.channels(90, 100))
        assert kept.equals(output)

    def test_compress_width_agrees_between_plan_and_layer(self) -> None:
        """Verify c=0.57 on 100 channels plans and builds 57 compressed channels."""
        policy = ReductionPolicy.compress(0.57)
        inner = D2Config(L=1, k=1, in_channels=99)
        config = D3Config(M=1, inner=inner, reduction=policy)
        output, state = d2_forward(inner, self.random_input((1, 99, 4, 4)), self.weights().d2(inner))

        compressed = reduce_channels(output, state, policy, self.weights().psi_conv(100, 57))
        block = d3_forward(config, self.random_input((1, 99, 4, 4)), self.weights().d3(config))

        assert config.plan()[0].out_channels == 57
        assert compressed.shape == (1, 57, 4, 4)
        assert block.shape == (1, 57, 4, 4)

    def test_transition_halves_channels_and_resolution(self) -> None:
        """Verify [1, 64, 32, 32] becomes [1, 32, 16, 16] and [1, 3, 8, 8] becomes [1, 1, 4, 4]."""
        cases = [((1, 64, 32, 32), (1, 32, 16, 16)), ((1, 3, 8, 8), (1, 1, 4, 4))]

        for shape, expected in cases:
            with self.subTest(shape=shape):
                channels = shape[1]
                output = transition(self.random_input(shape), self.weights().psi_conv(channels, channels // 2))

                assert output.shape == expected

    # ───────────────────────────────────────────────────────────
    # EDGE CASES
    # ───────────────────────────────────────────────────────────
    def test_reduce_channels_rejects_invalid_policies(self) -> None:
        """Verify LastN deeper than the block and a zero-width compression raise."""
        config = D2Config(L=2, k=2, in_channels=2)
        output, state = d2_forward(config, self.random_input((1, 2, 4, 4)), self.weights().d2(config))

        with self.assertRaises(ConfigurationError):
            reduce_channels(output, state, ReductionPolicy.last_n(3))

        with self.assertRaises(ConfigurationError):
            reduce_channels(output, state, ReductionPolicy.compress(0.1), self.weights().psi_conv(6, 1))

    def test_bottleneck_requires_weights(self) -> None:
        """Verify a needed bottleneck without weights raises."""
        with self.assertRaises(ConfigurationError):
            bottleneck(self.random_input((1, 9, 4, 4)), 8, None)

    def test_transition_rejects_odd_spatial_dims(self) -> None:
        """Verify a 7×8 input cannot be pooled."""
        with self.assertRaises(DimensionError):
            transition(self.random_input((1, 4, 7, 8)), self.weights().psi_conv(4, 2))

    def test_transition_rejects_wrong_weights(self) -> None:
        """Verify weights that do not halve the channels raise."""
        with self.assertRaises(ConfigurationError):
            transition(self.random_input((1, 4, 8, 8)), self.weights().psi_conv(4, 3))
