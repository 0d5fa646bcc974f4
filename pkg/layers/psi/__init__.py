from typing import List, Optional

import numpy as np

from interfaces.layer import LayerInterface
from models.norm_params import NormParams
from models.parameter import ParameterModel
from models.tensor import Tensor
from services.tensor.helpers.composite_psi import composite_psi, composite_psi_grads, kink_margin


class PsiLayer(LayerInterface):
    """Composite ψ: normalisation (per `NormParams.kind`) followed by ReLU."""

    # ───────────────────────────────────────────────────────────
    # PROPERTIES
    # ───────────────────────────────────────────────────────────
    _name: str
    _params: NormParams
    _gamma: ParameterModel
    _beta: ParameterModel
    _input: Optional[Tensor]

    # ───────────────────────────────────────────────────────────
    # CONSTRUCTOR
    # ───────────────────────────────────────────────────────────
    def __init__(self, name: str, params: NormParams) -> None:
        self._name = name
        self._params = params
        self._gamma = ParameterModel(name=f"{name}.gamma", value=params.gamma)
        self._beta = ParameterModel(name=f"{name}.beta", value=params.beta)
        self._input = None

    # ───────────────────────────────────────────────────────────
    # PUBLIC METHODS
    # ───────────────────────────────────────────────────────────
    def forward(self, input: Tensor) -> Tensor:  # noqa: A002
        self._input = input
        return composite_psi(input, self._params)

    def backward(self, grad_output: Tensor) -> Tensor:
        grad_input, grad_gamma, grad_beta = composite_psi_grads(self._cached_input(), self._params, grad_output)
        np.copyto(self._gamma.grad, grad_gamma)
        np.copyto(self._beta.grad, grad_beta)
        return grad_input

    def own_parameters(self) -> List[ParameterModel]:
        return [self._gamma, self._beta]

    def own_kink_margin(self) -> float:
        if self._input is None:
            return float("inf")

        return kink_margin(self._input, self._params)

    # ───────────────────────────────────────────────────────────
    # GETTERS
    # ───────────────────────────────────────────────────────────
    @property
    def params(self) -> NormParams:
        return self._params

    # ───────────────────────────────────────────────────────────
    # PRIVATE METHODS
    # ───────────────────────────────────────────────────────────
    def _cached_input(self) -> Tensor:
        if self._input is None:
            raise RuntimeError(f"{self._name}: backward called before forward")

        return self._input
