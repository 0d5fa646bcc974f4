import json
from pathlib import Path
from typing import Annotated, Any, Dict, Union

from pydantic import Field, TypeAdapter, ValidationError

from errors import ConfigurationError
from models.backbone_config import BackboneConfig
from models.d2_config import D2Config
from models.d3_config import D3Config
from services.logging import LoggingService

ModelConfig = Annotated[Union[D2Config, D3Config, BackboneConfig], Field(discriminator="type")]

_ADAPTER: TypeAdapter[Union[D2Config, D3Config, BackboneConfig]] = TypeAdapter(ModelConfig)


def parse_config(payload: Dict[str, Any]) -> Union[D2Config, D3Config, BackboneConfig]:
    """
    Validate a config mapping. A missing "type" is inferred from the keys.

    Raises:
        ConfigurationError: If the mapping does not describe a valid D2, D3 or backbone config.
    """
    data = dict(payload)

    if "type" not in data:
        data["type"] = "backbone" if "scales" in data else "d3" if "M" in data else "d2"

    try:
        return _ADAPTER.validate_python(data)
    except ValidationError as exc:
        raise ConfigurationError(f"Invalid {data['type']} config: {exc}") from exc


def get_config_by_path(path: str) -> Union[D2Config, D3Config, BackboneConfig]:
    """
    Load a D2, D3 or backbone config from a JSON file.

    Args:
        path: Absolute path, or relative to the working directory.

    Returns:
        The validated config.

    Raises:
        ConfigurationError: If the file is missing, not JSON, or invalid.
    """
    log = LoggingService()
    log.setup("get_config_by_path")

    path_obj = Path(path)
    resolved_path = path_obj if path_obj.is_absolute() else Path.cwd() / path_obj

    if not resolved_path.is_file():
        error_msg = f"Config file not found: {path}"
        log.error(error_msg)
        raise ConfigurationError(error_msg)

    try:
        payload = json.loads(resolved_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        error_msg = f"Config file {path} is not valid JSON: {exc}"
        log.error(error_msg)
        raise ConfigurationError(error_msg) from exc

    if not isinstance(payload, dict):
        error_msg = f"Config file {path} must hold a JSON object"
        log.error(error_msg)
        raise ConfigurationError(error_msg)

    return parse_config(payload)
