from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field, model_validator

from enums.reduction_kind import ReductionKind


class ReductionPolicy(BaseModel):
    """
    How a D2 block's output is shrunk before it joins the D3 concatenation.

    Attributes:
        kind: Compress, LastN or None.
        c: Compression ratio for Compress, strictly between 0 and 1.
        n: Number of trailing layer outputs kept by LastN.

    Example:
        >>> ReductionPolicy.compress(0.2).kind
        <ReductionKind.COMPRESS: 'compress'>
    """

    kind: ReductionKind = ReductionKind.NONE
    c: Optional[float] = Field(default=None, gt=0, lt=1)
    n: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def validate_kind(self) -> ReductionPolicy:
        if self.kind is ReductionKind.COMPRESS and self.c is None:
            raise ValueError("Compress reduction requires a ratio c")

        if self.kind is ReductionKind.LAST_N and self.n is None:
            raise ValueError("LastN reduction requires n")

        return self

    @classmethod
    def compress(cls, c: float) -> ReductionPolicy:
        return cls(kind=ReductionKind.COMPRESS, c=c)

    @classmethod
    def last_n(cls, n: int) -> ReductionPolicy:
        return cls(kind=ReductionKind.LAST_N, n=n)

    @classmethod
    def none(cls) -> ReductionPolicy:
        return cls(kind=ReductionKind.NONE)
