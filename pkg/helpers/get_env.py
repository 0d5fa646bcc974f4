import os
from typing import Optional

from dotenv import load_dotenv

from errors import ConfigurationError

load_dotenv()


def get_env(key: str, default: Optional[str] = None, required: bool = False) -> Optional[str]:
    """
    Read an environment variable, after loading a local .env file.

    Args:
        key: Variable name.
        default: Value returned when the variable is unset.
        required: Raise instead of returning None for a missing variable.

    Returns:
        The variable value, or `default`.

    Raises:
        ConfigurationError: If `required` is set and the variable is missing.
    """

    value = os.getenv(key, default)

    if required and value is None:
        raise ConfigurationError(f"Environment variable '{key}' is required but not set.")

    return value
