import json
import tempfile
import unittest
from pathlib import Path
from typing import Any, Dict

from d3kit import main
from services.logging import LoggingService


class WrapperCli(unittest.TestCase):
    """Runs d3kit commands in-process against a scratch folder."""

    # ───────────────────────────────────────────────────────────
    # PROPERTIES
    # ───────────────────────────────────────────────────────────
    _folder: tempfile.TemporaryDirectory
    _log: LoggingService

    # ───────────────────────────────────────────────────────────
    # CONSTRUCTOR
    # ───────────────────────────────────────────────────────────
    def setUp(self) -> None:
        super().setUp()
        self._folder = tempfile.TemporaryDirectory()

        self._log = LoggingService()
        self._log.setup(self.__class__.__name__)

    def tearDown(self) -> None:
        self._folder.cleanup()
        super().tearDown()

    # ───────────────────────────────────────────────────────────
    # PUBLIC METHODS
    # ───────────────────────────────────────────────────────────
    def run_cli(self, *argv: str) -> int:
        self._log.info(f"d3kit {' '.join(argv)}")
        return main(list(argv))

    def path(self, name: str) -> str:
        return str(Path(self._folder.name) / name)

    def write_config(self, name: str, payload: Dict[str, Any]) -> str:
        target = Path(self.path(name))
        target.write_text(json.dumps(payload), encoding="utf-8")
        return str(target)

    def read_json(self, name: str) -> Any:
        with Path(self.path(name)).open(encoding="utf-8") as f:
            return json.load(f)

    def read_bytes(self, name: str) -> bytes:
        return Path(self.path(name)).read_bytes()

    def get_json_data(self, path: str) -> Any:
        json_path = Path(__file__).parent.parent / "jsons" / path
        with json_path.open(encoding="utf-8") as f:
            return json.load(f)
