def get_layer_path(*parts: str) -> str:
    """
    Dotted layer path from non-empty parts.

    Example:
        >>> get_layer_path("", "block1", "layer2")
        'block1.layer2'
    """
    return ".".join(part for part in parts if part)
