from __future__ import annotations

from typing import Any, Dict

from pydantic import BaseModel, Field, computed_field

from enums.grad_check_op import GradCheckOp


class GradCheckReport(BaseModel):
    """Analytic-versus-finite-difference comparison for one parameter block of one op."""

    op: GradCheckOp
    block: str
    seed: int
    max_abs_error: float = Field(ge=0)
    max_rel_error: float = Field(ge=0)
    eps: float = Field(gt=0)
    tolerance: float = Field(gt=0)
    elements: int = Field(default=0, ge=0)

    @computed_field
    @property
    def passed(self) -> bool:
        return self.max_rel_error < self.tolerance

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json")
