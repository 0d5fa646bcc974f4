import logging
from io import StringIO
from pathlib import Path
from typing import Any, ClassVar, Dict, Optional

from colorama import Fore, Style, just_fix_windows_console
from rich.console import Console
from rich.json import JSON

from configs.system import LOG_LEVEL, LOGS_FOLDER, SYSTEM_NAME
from helpers.get_run_id import get_run_id

SUCCESS_LEVEL = 25
logging.addLevelName(SUCCESS_LEVEL, "SUCCESS")

LOG_FORMAT = "[%(asctime)s] [%(levelname)s] [%(name)s] > %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


class ColoredFormatter(logging.Formatter):
    LEVEL_COLORS: ClassVar[Dict[int, str]] = {
        logging.DEBUG: Fore.CYAN,
        logging.INFO: Fore.WHITE,
        logging.WARNING: Fore.YELLOW,
        logging.ERROR: Fore.RED,
        logging.CRITICAL: Fore.RED + Style.BRIGHT,
        SUCCESS_LEVEL: Fore.GREEN,
    }

    def format(self, record: logging.LogRecord) -> str:
        color = self.LEVEL_COLORS.get(record.levelno, "")
        levelname = record.levelname
        record.levelname = f"{color}{levelname}{Style.RESET_ALL}"

        try:
            return super().format(record)
        finally:
            record.levelname = levelname


class LoggingService:
    """
    Named logger writing colored lines to stderr and plain lines to `<logs>/<name>.log`.

    Reports go to files chosen by the caller, never through this service, so log
    timestamps cannot leak into deterministic outputs.
    """

    # ───────────────────────────────────────────────────────────
    # PROPERTIES
    # ───────────────────────────────────────────────────────────
    _name: str = SYSTEM_NAME
    _prefix: str = ""
    _logs_folder: ClassVar[Path] = LOGS_FOLDER

    logger: logging.Logger

    # ───────────────────────────────────────────────────────────
    # PUBLIC METHODS
    # ───────────────────────────────────────────────────────────
    def debug(self, message: Any) -> None:
        if isinstance(message, (dict, list)):
            string_io = StringIO()
            console = Console(file=string_io, force_terminal=True, width=120)
            console.print(JSON.from_data(message))
            output = string_io.getvalue().rstrip()
        else:
            output = str(message)

        self.logger.debug(self._format(output))

    def info(self, message: str) -> None:
        self.logger.info(self._format(message))

    def success(self, message: str) -> None:
        self.logger.log(SUCCESS_LEVEL, self._format(message))

    def warning(self, message: str) -> None:
        self.logger.warning(self._format(message))

    def error(self, message: str) -> None:
        self.logger.error(self._format(message))

    def setup(self, name: str, level: Optional[str] = None) -> None:
        just_fix_windows_console()

        self._name = get_run_id(SYSTEM_NAME, name, separator="_")
        self.logger = logging.getLogger(self._name)

        if self.logger.hasHandlers():
            return

        self._logs_folder.mkdir(parents=True, exist_ok=True)

        file_handler = logging.FileHandler(self._logs_folder / f"{self._name}.log")
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT))

        console_handler = logging.StreamHandler()
        console_handler.setLevel(level or LOG_LEVEL)
        console_handler.setFormatter(ColoredFormatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT))

        self.logger.setLevel(logging.DEBUG)
        self.logger.addHandler(file_handler)
        self.logger.addHandler(console_handler)
        self.logger.propagate = False

    def setup_prefix(self, prefix: str) -> None:
        self._prefix = prefix

    # ───────────────────────────────────────────────────────────
    # PRIVATE METHODS
    # ───────────────────────────────────────────────────────────
    def _format(self, message: str) -> str:
        return f"{self._prefix} {message}" if self._prefix else message
