from typing import Any, List, Optional

from enums.dilation_mode import DilationMode
from errors import ArgumentError


def parse_int(value: Any) -> int:
    """
    Parse a value to integer.

    Args:
        value: int, float or numeric string; None parses to 0.

    Returns:
        Parsed integer.

    Raises:
        ArgumentError: If the value is not numeric.
    """
    if value is None:
        return 0

    if isinstance(value, int):
        return value

    try:
        return int(float(value))
    except (TypeError, ValueError) as exc:
        raise ArgumentError(f"Expected an integer, got '{value}'") from exc


def parse_optional_float(value: Any) -> Optional[float]:
    """None or empty string parse to None; anything else must be numeric."""
    if value is None or value == "":
        return None

    try:
        return float(value)
    except (TypeError, ValueError) as exc:
        raise ArgumentError(f"Expected a number, got '{value}'") from exc


def parse_int_list(value: str) -> List[int]:
    """
    Parse a comma separated list of integers; "a:b" expands to the inclusive range.

    Example:
        >>> parse_int_list("-2:1,5")
        [-2, -1, 0, 1, 5]
    """
    result: List[int] = []

    for chunk in value.split(","):
        chunk = chunk.strip()

        if not chunk:
            continue

        if ":" in chunk[1:]:
            split = chunk.index(":", 1)
            start, end = parse_int(chunk[:split]), parse_int(chunk[split + 1 :])

            if end < start:
                raise ArgumentError(f"Empty range '{chunk}'")

            result.extend(range(start, end + 1))
        else:
            result.append(parse_int(chunk))

    return result


def parse_modes(value: str) -> List[DilationMode]:
    """
    Parse a comma separated list of dilation modes.

    Raises:
        ArgumentError: On an unknown mode name.
    """
    modes: List[DilationMode] = []

    for chunk in value.split(","):
        name = chunk.strip().lower()

        if not name:
            continue

        try:
            modes.append(DilationMode(name))
        except ValueError as exc:
            choices = ", ".join(mode.value for mode in DilationMode)
            raise ArgumentError(f"Unknown dilation mode '{name}', expected one of: {choices}") from exc

    return modes
