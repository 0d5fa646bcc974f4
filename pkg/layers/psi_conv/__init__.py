from typing import List, Optional

import numpy as np

from errors import ConfigurationError
from interfaces.layer import LayerInterface
from layers.psi import PsiLayer
from models.conv_kernel import ConvKernel
from models.dilation_group import DilationGroup
from models.multi_dilated_kernel import MultiDilatedKernel
from models.parameter import ParameterModel
from models.psi_conv_weights import PsiConvWeights
from models.tensor import Tensor
from services.conv.helpers.multidilated_conv import multidilated_conv, multidilated_grads


class PsiConvLayer(LayerInterface):
    """
    Optional ψ followed by a (multi)dilated convolution.

    One weight array [out, in, kh, kw] is sliced along the input axis into the
    dilation groups; without explicit groups the whole input is one group with
    dilation 1.
    """

    # ───────────────────────────────────────────────────────────
    # PROPERTIES
    # ───────────────────────────────────────────────────────────
    _name: str
    _psi: Optional[PsiLayer]
    _weight: ParameterModel
    _groups: List[DilationGroup]
    _input: Optional[Tensor]

    # ───────────────────────────────────────────────────────────
    # CONSTRUCTOR
    # ───────────────────────────────────────────────────────────
    def __init__(self, name: str, weights: PsiConvWeights, groups: Optional[List[DilationGroup]] = None) -> None:
        self._name = name
        self._psi = PsiLayer(name, weights.norm) if weights.norm is not None else None
        self._weight = ParameterModel(name=f"{name}.weight", value=weights.kernel.weights)
        self._groups = groups or [DilationGroup(channel_start=0, channel_end=weights.kernel.in_channels)]
        self._input = None

        if weights.norm is not None and weights.norm.channels != weights.kernel.in_channels:
            raise ConfigurationError(
                f"{name}: ψ covers {weights.norm.channels} channels but the kernel reads {weights.kernel.in_channels}"
            )

        self._kernel().check(weights.kernel.in_channels)

    # ───────────────────────────────────────────────────────────
    # PUBLIC METHODS
    # ───────────────────────────────────────────────────────────
    def forward(self, input: Tensor) -> Tensor:  # noqa: A002
        if input.c != self.in_channels:
            raise ConfigurationError(f"{self._name}: expects {self.in_channels} input channels, got {input.c}")

        activated = self._psi.forward(input) if self._psi is not None else input
        self._input = activated
        return multidilated_conv(activated, self._kernel())

    def backward(self, grad_output: Tensor) -> Tensor:
        if self._input is None:
            raise RuntimeError(f"{self._name}: backward called before forward")

        grad_input, grad_weights = multidilated_grads(self._input, self._kernel(), grad_output)
        np.copyto(self._weight.grad, np.concatenate(grad_weights, axis=1))

        if self._psi is None:
            return grad_input

        return self._psi.backward(grad_input)

    def children(self) -> List[LayerInterface]:
        return [self._psi] if self._psi is not None else []

    def own_parameters(self) -> List[ParameterModel]:
        return [self._weight]

    # ───────────────────────────────────────────────────────────
    # GETTERS
    # ───────────────────────────────────────────────────────────
    @property
    def in_channels(self) -> int:
        return int(self._weight.value.shape[1])

    @property
    def out_channels(self) -> int:
        return int(self._weight.value.shape[0])

    @property
    def groups(self) -> List[DilationGroup]:
        return list(self._groups)

    # ───────────────────────────────────────────────────────────
    # PRIVATE METHODS
    # ───────────────────────────────────────────────────────────
    def _kernel(self) -> MultiDilatedKernel:
        weights = self._weight.value
        kernels = [ConvKernel(weights=weights[:, group.channel_start : group.channel_end]) for group in self._groups]
        return MultiDilatedKernel(groups=self._groups, kernels=kernels)
