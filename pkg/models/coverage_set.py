from __future__ import annotations

from typing import Iterable, List, Tuple

from pydantic import BaseModel, ConfigDict, field_validator

from errors import ArgumentError


class CoverageSet(BaseModel):
    """
    Sorted set of integer input offsets that influence an output at offset 0.

    Example:
        >>> CoverageSet.of([1, -1, 0]).dilate([-2, 0, 2]).offsets
        (-3, -2, -1, 0, 1, 2, 3)
    """

    model_config = ConfigDict(frozen=True)

    offsets: Tuple[int, ...] = ()

    @field_validator("offsets", mode="before")
    @classmethod
    def normalize(cls, value: Iterable[int]) -> Tuple[int, ...]:
        return tuple(sorted({int(offset) for offset in value}))

    @classmethod
    def of(cls, offsets: Iterable[int]) -> CoverageSet:
        return cls(offsets=tuple(offsets))

    @classmethod
    def origin(cls) -> CoverageSet:
        return cls(offsets=(0,))

    def union(self, other: CoverageSet) -> CoverageSet:
        return CoverageSet.of(self.offsets + other.offsets)

    def dilate(self, taps: Iterable[int]) -> CoverageSet:
        """Minkowski sum with a tap set."""
        taps = tuple(taps)
        return CoverageSet.of(offset + tap for offset in self.offsets for tap in taps)

    def hull(self) -> Tuple[int, int]:
        if not self.offsets:
            raise ArgumentError("Empty coverage set has no hull")

        return self.offsets[0], self.offsets[-1]

    def is_symmetric(self) -> bool:
        return set(self.offsets) == {-offset for offset in self.offsets}

    def to_list(self) -> List[int]:
        return list(self.offsets)

    @property
    def half_width(self) -> int:
        low, high = self.hull()
        return max(-low, high)

    @property
    def is_empty(self) -> bool:
        return not self.offsets

    def __contains__(self, offset: object) -> bool:
        return offset in self.offsets

    def __len__(self) -> int:
        return len(self.offsets)


class CoverageSet2D(BaseModel):
    """Axis product of a row set and a column set."""

    model_config = ConfigDict(frozen=True)

    rows: CoverageSet
    cols: CoverageSet

    @classmethod
    def axis_product(cls, rows: CoverageSet, cols: CoverageSet) -> CoverageSet2D:
        return cls(rows=rows, cols=cols)

    def offsets(self) -> List[Tuple[int, int]]:
        return [(row, col) for row in self.rows.offsets for col in self.cols.offsets]

    def __contains__(self, offset: object) -> bool:
        if not isinstance(offset, tuple) or len(offset) != 2:  # noqa: PLR2004
            return False

        return offset[0] in self.rows and offset[1] in self.cols

    def __len__(self) -> int:
        return len(self.rows) * len(self.cols)
