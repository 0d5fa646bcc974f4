import math
import time
from typing import Any, Dict, Optional

import numpy as np

from configs.constants import MARKER_TWIN_FLOOR
from errors import DimensionError, NumericError
from helpers.get_duration import get_duration
from interfaces.layer import LayerInterface
from models.optimizer_config import OptimizerConfig
from models.tensor import Tensor
from models.toy_task import ToyTask
from models.train_report import TrainReport
from services.logging import LoggingService
from services.trainer.helpers.marker_twin_loss import marker_twin_loss


class TrainerService:
    """
    Minibatch SGD with momentum on the mean squared logit error.

    Each epoch visits the samples in a seeded permutation; the recorded loss is
    the full-dataset loss after the epoch, evaluated in sample order.
    """

    # ───────────────────────────────────────────────────────────
    # PROPERTIES
    # ───────────────────────────────────────────────────────────
    _optimizer: OptimizerConfig
    _log: LoggingService

    # ───────────────────────────────────────────────────────────
    # CONSTRUCTOR
    # ───────────────────────────────────────────────────────────
    def __init__(self, optimizer: Optional[OptimizerConfig] = None) -> None:
        self._optimizer = optimizer or OptimizerConfig()

        self._log = LoggingService()
        self._log.setup("trainer_service")

    # ───────────────────────────────────────────────────────────
    # PUBLIC METHODS
    # ───────────────────────────────────────────────────────────
    def train(
        self,
        model: LayerInterface,
        task: ToyTask,
        seed: int = 0,
        run_id: str = "run",
        config: Optional[Dict[str, Any]] = None,
    ) -> TrainReport:
        """
        Fit `model` to `task`.

        Raises:
            DimensionError: If the model does not emit one channel per position.
            NumericError: If the loss becomes non-finite; `epoch` is 1-based.
        """
        self._log.setup_prefix(f"[{run_id}]")
        started_at = time.perf_counter()
        rng = np.random.default_rng(seed)
        parameters = model.parameters()
        velocities = [np.zeros_like(parameter.value) for parameter in parameters]
        losses = []

        self._check_output(model, task)

        for epoch in range(self._optimizer.epochs):
            rate = self._optimizer.learning_rate(epoch)
            order = rng.permutation(task.count)

            for start in range(0, task.count, self._optimizer.batch_size):
                inputs, targets = task.batch(order[start : start + self._optimizer.batch_size])
                output = model.forward(inputs)
                model.backward(Tensor(2.0 * (output.data - targets.data) / output.data.size))

                for parameter, velocity in zip(parameters, velocities, strict=True):
                    gradient = parameter.grad + self._optimizer.weight_decay * parameter.value
                    velocity *= self._optimizer.momentum
                    velocity -= rate * gradient
                    parameter.value += velocity

            loss = self.evaluate(model, task)

            if not math.isfinite(loss):
                raise NumericError(f"Loss became {loss} at epoch {epoch + 1}", epoch=epoch + 1)

            losses.append(loss)

            if (epoch + 1) % 10 == 0 or epoch + 1 == self._optimizer.epochs:
                self._log.info(f"Epoch {epoch + 1}/{self._optimizer.epochs}: loss {loss:.6f}")

        twin = marker_twin_loss(model, task)
        elapsed = time.perf_counter() - started_at
        report = TrainReport(
            run_id=run_id,
            config=config or {},
            seed=seed,
            losses=losses,
            marker_twin_loss=twin,
            marker_twin_floor=MARKER_TWIN_FLOOR,
            train_floor=MARKER_TWIN_FLOOR * (task.length - task.distance) / task.length,
            wall_clock=elapsed,
        )

        self._log.success(f"Finished in {get_duration(elapsed)}: final loss {losses[-1]:.6f}, twin loss {twin:.6f}")
        return report

    def evaluate(self, model: LayerInterface, task: ToyTask) -> float:
        output = model.forward(Tensor(task.inputs))
        return float(np.mean((output.data - task.targets) ** 2))

    # ───────────────────────────────────────────────────────────
    # PRIVATE METHODS
    # ───────────────────────────────────────────────────────────
    def _check_output(self, model: LayerInterface, task: ToyTask) -> None:
        inputs, targets = task.sample(0)
        output = model.forward(inputs)

        if output.shape != targets.shape:
            raise DimensionError(f"Model output {output.shape} does not match targets {targets.shape}")
