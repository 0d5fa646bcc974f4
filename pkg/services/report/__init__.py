import json
from pathlib import Path
from typing import Any, Dict, List, Union

import polars as pl

from services.logging import LoggingService


class ReportService:
    """
    Writes analysis reports to disk.

    JSON output uses sorted keys, two-space indentation and a trailing newline so
    that identical reports are byte-identical files. CSV mirrors hold the tabular
    section of a report, one row per dict.
    """

    # ───────────────────────────────────────────────────────────
    # PROPERTIES
    # ───────────────────────────────────────────────────────────
    _log: LoggingService

    # ───────────────────────────────────────────────────────────
    # CONSTRUCTOR
    # ───────────────────────────────────────────────────────────
    def __init__(self) -> None:
        self._log = LoggingService()
        self._log.setup("report_service")

    # ───────────────────────────────────────────────────────────
    # PUBLIC METHODS
    # ───────────────────────────────────────────────────────────
    def dumps(self, payload: Union[Dict[str, Any], List[Any]]) -> str:
        return json.dumps(payload, sort_keys=True, indent=2, allow_nan=False) + "\n"

    def write_json(self, path: Union[str, Path], payload: Union[Dict[str, Any], List[Any]]) -> Path:
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(self.dumps(payload), encoding="utf-8")

        self._log.info(f"Report written to {target}")
        return target

    def write_csv(self, path: Union[str, Path], rows: List[Dict[str, Any]]) -> Path:
        """
        Write rows as CSV with columns in first-row order.

        Args:
            path: Output file.
            rows: Flat dicts sharing the same keys; an empty list writes an empty file.

        Returns:
            The written path.
        """
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)

        if not rows:
            target.write_text("", encoding="utf-8")
        else:
            pl.DataFrame(rows).write_csv(target)

        self._log.info(f"CSV written to {target}")
        return target
