from typing import List

from errors import ArgumentError
from models.coverage_set import CoverageSet


def blind_spots(coverage: CoverageSet) -> List[int]:
    """
    Offsets inside the hull of a coverage set that the set misses.

    Raises:
        ArgumentError: If the set is empty.

    Example:
        >>> blind_spots(CoverageSet.of([-4, 0, 4]))
        [-3, -2, -1, 1, 2, 3]
    """
    if coverage.is_empty:
        raise ArgumentError("Blind spots of an empty coverage set are undefined")

    low, high = coverage.hull()
    covered = set(coverage.offsets)
    return [offset for offset in range(low, high + 1) if offset not in covered]
