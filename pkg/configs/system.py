from pathlib import Path

from helpers.get_env import get_env

SYSTEM_NAME = "d3kit"
LOGS_FOLDER = Path(get_env("D3KIT_LOGS_FOLDER", default="logs") or "logs")
LOG_LEVEL = (get_env("D3KIT_LOG_LEVEL", default="INFO") or "INFO").upper()
