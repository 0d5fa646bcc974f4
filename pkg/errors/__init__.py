from typing import Optional


class D3KitError(Exception):
    """Base class for every error raised by d3kit."""


class DimensionError(D3KitError, ValueError):
    """Tensor shapes or channel counts do not line up."""


class ConfigurationError(D3KitError, ValueError):
    """A block, kernel or weight set is inconsistent with its configuration."""


class ArgumentError(D3KitError, ValueError):
    """A scalar argument is outside its valid range."""


class UnknownNameError(D3KitError, KeyError):
    """A preset, graph node or registered operation does not exist."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class NumericError(D3KitError, ArithmeticError):
    """
    A computation produced a non-finite value.

    Attributes:
        epoch: Training epoch at which the value appeared, when raised by the trainer.
    """

    epoch: Optional[int]

    def __init__(self, message: str, epoch: Optional[int] = None) -> None:
        super().__init__(message)
        self.epoch = epoch


class WorkerError(D3KitError, RuntimeError):
    """A worker process failed outside d3kit's own error types or exited without reporting."""
