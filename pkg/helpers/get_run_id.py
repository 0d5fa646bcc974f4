import re
from typing import Any


def get_run_id(*parts: Any, separator: str = "-") -> str:
    """
    Build a lowercase, filesystem-safe identifier from arbitrary parts.

    Args:
        *parts: Values joined in order; None values are skipped.
        separator: Joining character.

    Returns:
        Slug such as "d2-multi-l5-k8-d20-seed0".

    Example:
        >>> get_run_id("D2", "Multi", "L5", None)
        'd2-multi-l5'
    """
    words = [str(part) for part in parts if part is not None and str(part) != ""]
    text = separator.join(words).lower()
    text = re.sub(rf"[^a-z0-9.{re.escape(separator)}]+", separator, text)
    text = re.sub(rf"{re.escape(separator)}+", separator, text)
    return text.strip(separator)
