def format_parameter_count(count: int) -> str:
    """
    Human-readable parameter count.

    Args:
        count: Number of parameters.

    Returns:
        String such as "9.7M", "345K" or "200".

    Example:
        >>> format_parameter_count(10_920_049)
        '10.9M'
    """
    if count >= 1_000_000_000:
        return f"{count / 1_000_000_000:.1f}B"

    if count >= 1_000_000:
        return f"{count / 1_000_000:.1f}M"

    if count >= 1_000:
        return f"{count / 1_000:.0f}K"

    return str(count)
