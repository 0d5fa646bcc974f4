from typing import Callable, Dict, List, Optional, Tuple, Union

import numpy as np

from configs.constants import (
    COMPOSITE_KINK_MARGIN,
    GRAD_CHECK_EPS,
    GRAD_CHECK_TOLERANCE_COMPOSITE,
    GRAD_CHECK_TOLERANCE_SINGLE,
    KINK_MAX_ATTEMPTS,
    PSI_KINK_MARGIN,
    RELATIVE_ERROR_FLOOR,
)
from enums.dilation_mode import DilationMode
from enums.grad_check_op import GradCheckOp
from errors import NumericError, UnknownNameError
from interfaces.layer import LayerInterface
from layers.avg_pool import AvgPoolLayer
from layers.d2_block import D2BlockLayer
from layers.d3_block import D3BlockLayer
from layers.psi import PsiLayer
from layers.psi_conv import PsiConvLayer
from models.d2_config import D2Config
from models.d3_config import D3Config
from models.dilation_group import DilationGroup
from models.grad_check_report import GradCheckReport
from models.norm_params import NormParams
from models.parameter import ParameterModel
from models.psi_conv_weights import PsiConvWeights
from models.reduction import ReductionPolicy
from models.tensor import Tensor
from services.grad_check.helpers.finite_diff_grad import finite_diff_array
from services.logging import LoggingService
from services.weights import WeightsService

Shape = Tuple[int, int, int, int]
CaseBuilder = Callable[[np.random.Generator], Tuple[LayerInterface, Shape]]


class GradCheckService:
    """
    Finite-difference verification of every analytic backward pass.

    Each registered op is wrapped as a layer with seeded random weights. The
    scalar checked is <forward(x), r> for a fixed random direction r, whose
    analytic gradient is backward(r). Inputs are redrawn until no ReLU
    pre-activation lies closer than the kink margin to zero.
    """

    # ───────────────────────────────────────────────────────────
    # PROPERTIES
    # ───────────────────────────────────────────────────────────
    _eps: float
    _log: LoggingService
    _cases: Dict[GradCheckOp, CaseBuilder]

    # ───────────────────────────────────────────────────────────
    # CONSTRUCTOR
    # ───────────────────────────────────────────────────────────
    def __init__(self, eps: float = GRAD_CHECK_EPS) -> None:
        self._eps = eps
        self._cases = {
            GradCheckOp.CONV2D: self._conv2d_case,
            GradCheckOp.MULTIDILATED_CONV: self._multidilated_case,
            GradCheckOp.COMPOSITE_PSI: self._psi_case,
            GradCheckOp.AVG_POOL: self._avg_pool_case,
            GradCheckOp.D2_FORWARD: self._d2_case,
            GradCheckOp.D3_FORWARD: self._d3_case,
            GradCheckOp.D3_FORWARD_LAST_N: self._d3_last_n_case,
        }

        self._log = LoggingService()
        self._log.setup("grad_check_service")

    # ───────────────────────────────────────────────────────────
    # PUBLIC METHODS
    # ───────────────────────────────────────────────────────────
    def check_op(
        self,
        op: Union[GradCheckOp, str],
        seed: int,
        tolerance: Optional[float] = None,
        block: str = "input",
    ) -> GradCheckReport:
        """
        Check one parameter block of one op.

        Raises:
            UnknownNameError: On an unknown op or a block the op does not have.
        """
        resolved = self.resolve(op)

        if block not in resolved.blocks():
            raise UnknownNameError(f"Op {resolved.value} has no block '{block}'; expected one of {resolved.blocks()}")

        return self._run(resolved, seed, tolerance, [block])[0]

    def check_all(
        self,
        op: Union[GradCheckOp, str],
        seed: int,
        tolerance: Optional[float] = None,
    ) -> List[GradCheckReport]:
        """One report per parameter block of `op`, input first."""
        resolved = self.resolve(op)
        return self._run(resolved, seed, tolerance, list(resolved.blocks()))

    def resolve(self, op: Union[GradCheckOp, str]) -> GradCheckOp:
        if isinstance(op, GradCheckOp):
            return op

        try:
            return GradCheckOp(op)
        except ValueError as exc:
            names = ", ".join(item.value for item in GradCheckOp)
            raise UnknownNameError(f"Unknown grad-check op '{op}', expected one of: {names}") from exc

    def default_tolerance(self, op: GradCheckOp) -> float:
        return GRAD_CHECK_TOLERANCE_COMPOSITE if op.is_composite() else GRAD_CHECK_TOLERANCE_SINGLE

    # ───────────────────────────────────────────────────────────
    # PRIVATE METHODS
    # ───────────────────────────────────────────────────────────
    def _run(
        self,
        op: GradCheckOp,
        seed: int,
        tolerance: Optional[float],
        blocks: List[str],
    ) -> List[GradCheckReport]:
        rng = np.random.default_rng(seed)
        layer, shape = self._cases[op](rng)
        x = self._draw_input(op, layer, shape, rng)

        output = layer.forward(Tensor(x))
        direction = rng.standard_normal(output.shape)
        grad_input = layer.backward(Tensor(direction)).data

        def objective() -> float:
            return float(np.sum(layer.forward(Tensor(x)).data * direction))

        reports = []
        limit = tolerance if tolerance is not None else self.default_tolerance(op)

        for block in blocks:
            if block == "input":
                analytic, numeric = grad_input, finite_diff_array(objective, x, self._eps)
            else:
                parameters = self._block_parameters(layer, block)
                analytic = np.concatenate([parameter.grad.ravel() for parameter in parameters])
                numeric = np.concatenate(
                    [finite_diff_array(objective, parameter.value, self._eps).ravel() for parameter in parameters]
                )

            reports.append(self._report(op, block, seed, analytic, numeric, limit))

        return reports

    def _report(
        self,
        op: GradCheckOp,
        block: str,
        seed: int,
        analytic: np.ndarray,
        numeric: np.ndarray,
        tolerance: float,
    ) -> GradCheckReport:
        max_abs = float(np.max(np.abs(analytic - numeric))) if analytic.size else 0.0
        scale = max(float(np.max(np.abs(analytic), initial=0.0)), float(np.max(np.abs(numeric), initial=0.0)))
        report = GradCheckReport(
            op=op,
            block=block,
            seed=seed,
            max_abs_error=max_abs,
            max_rel_error=max_abs / max(scale, RELATIVE_ERROR_FLOOR),
            eps=self._eps,
            tolerance=tolerance,
            elements=int(analytic.size),
        )

        message = f"{op.value}/{block} seed={seed}: rel {report.max_rel_error:.3e} (tol {tolerance:.0e})"

        if report.passed:
            self._log.success(message)
        else:
            self._log.error(message)

        return report

    def _draw_input(self, op: GradCheckOp, layer: LayerInterface, shape: Shape, rng: np.random.Generator) -> np.ndarray:
        margin = PSI_KINK_MARGIN if op is GradCheckOp.COMPOSITE_PSI else COMPOSITE_KINK_MARGIN

        for _ in range(KINK_MAX_ATTEMPTS):
            x = rng.standard_normal(shape)
            layer.forward(Tensor(x))

            if layer.kink_margin() >= margin:
                return x

        raise NumericError(f"No input for {op.value} kept ReLU pre-activations {margin} away from zero")

    def _block_parameters(self, layer: LayerInterface, block: str) -> List[ParameterModel]:
        parameters = layer.parameters()

        if block == "weights":
            return parameters

        return [parameter for parameter in parameters if parameter.name.endswith(f".{block}")]

    def _norm(self, channels: int, rng: np.random.Generator) -> NormParams:
        return NormParams(gamma=rng.uniform(0.5, 1.5, channels), beta=rng.normal(0.0, 0.5, channels))

    def _conv2d_case(self, rng: np.random.Generator) -> Tuple[LayerInterface, Shape]:
        dilation = int(rng.integers(1, 9))
        weights = WeightsService(seed=int(rng.integers(2**31))).psi_conv(3, 4, (3, 3), psi=False)
        group = DilationGroup(channel_start=0, channel_end=3, dilation=dilation)
        return PsiConvLayer("conv2d", weights, [group]), (2, 3, 9, 9)

    def _multidilated_case(self, rng: np.random.Generator) -> Tuple[LayerInterface, Shape]:
        weights = WeightsService(seed=int(rng.integers(2**31))).psi_conv(4, 3, (3, 3), psi=False)
        groups = [
            DilationGroup(channel_start=0, channel_end=2, dilation=1),
            DilationGroup(channel_start=2, channel_end=3, dilation=2),
            DilationGroup(channel_start=3, channel_end=4, dilation=4),
        ]
        return PsiConvLayer("multidilated_conv", weights, groups), (2, 4, 9, 9)

    def _psi_case(self, rng: np.random.Generator) -> Tuple[LayerInterface, Shape]:
        return PsiLayer("composite_psi", self._norm(3, rng)), (3, 3, 4, 4)

    def _avg_pool_case(self, rng: np.random.Generator) -> Tuple[LayerInterface, Shape]:  # noqa: ARG002
        return AvgPoolLayer("avg_pool"), (2, 3, 6, 6)

    def _d2_case(self, rng: np.random.Generator) -> Tuple[LayerInterface, Shape]:
        config = D2Config(L=3, k=2, in_channels=3, mode=DilationMode.MULTI)
        weights = WeightsService(seed=int(rng.integers(2**31))).d2(config)
        self._randomize_norms(weights.layers, rng)
        return D2BlockLayer("d2", config, weights), (2, 3, 8, 8)

    def _d3_case(self, rng: np.random.Generator) -> Tuple[LayerInterface, Shape]:
        config = D3Config(
            M=2,
            inner=D2Config(L=2, k=2, in_channels=10, mode=DilationMode.MULTI),
            B=8,
            reduction=ReductionPolicy.compress(0.5),
        )
        weights = WeightsService(seed=int(rng.integers(2**31))).d3(config)

        for block in weights.blocks:
            self._randomize_norms([block.bottleneck, *block.d2.layers, block.reduction], rng)

        return D3BlockLayer("d3", config, weights), (2, 10, 6, 6)

    def _d3_last_n_case(self, rng: np.random.Generator) -> Tuple[LayerInterface, Shape]:
        config = D3Config(
            M=2,
            inner=D2Config(L=3, k=2, in_channels=4, mode=DilationMode.MULTI),
            reduction=ReductionPolicy.last_n(2),
        )
        weights = WeightsService(seed=int(rng.integers(2**31))).d3(config)

        for block in weights.blocks:
            self._randomize_norms([block.bottleneck, *block.d2.layers, block.reduction], rng)

        return D3BlockLayer("d3_last_n", config, weights), (2, 4, 6, 6)

    def _randomize_norms(self, weights: List[Optional[PsiConvWeights]], rng: np.random.Generator) -> None:
        for layer_weights in weights:
            if layer_weights is not None and layer_weights.norm is not None:
                channels = layer_weights.norm.channels
                layer_weights.norm.gamma[:] = rng.uniform(0.5, 1.5, channels)
                layer_weights.norm.beta[:] = rng.normal(0.0, 0.5, channels)
