def get_duration(seconds: float) -> str:
    """
    Format an elapsed wall-clock time.

    Args:
        seconds: Elapsed seconds.

    Returns:
        "350 ms", "12.4 seconds", "3 minutes 5 seconds"; "0 ms" for non-positive input.
    """
    seconds_in_minute = 60

    if seconds <= 0:
        return "0 ms"

    if seconds < 1:
        return f"{round(seconds * 1000)} ms"

    if seconds < seconds_in_minute:
        return f"{seconds:.1f} seconds"

    minutes = int(seconds // seconds_in_minute)
    rest = int(seconds - minutes * seconds_in_minute)
    unit = "minute" if minutes == 1 else "minutes"
    return f"{minutes} {unit} {rest} seconds"
