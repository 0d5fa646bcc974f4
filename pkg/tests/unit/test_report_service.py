import json
import tempfile
import unittest
from pathlib import Path

from services.report import ReportService


class TestReportService(unittest.TestCase):
    # ───────────────────────────────────────────────────────────
    # CONSTANTS
    # ───────────────────────────────────────────────────────────
    _PAYLOAD = {"total": 200, "entries": {"layer2": 120, "layer1": 80}, "name": "d2"}
    _ROWS = [{"layer": "layer1", "params": 80}, {"layer": "layer2", "params": 120}]

    # ───────────────────────────────────────────────────────────
    # PROPERTIES
    # ───────────────────────────────────────────────────────────
    _folder: tempfile.TemporaryDirectory
    _reports: ReportService

    def setUp(self) -> None:
        self._folder = tempfile.TemporaryDirectory()
        self._reports = ReportService()

    def tearDown(self) -> None:
        self._folder.cleanup()

    # ───────────────────────────────────────────────────────────
    # SUCCESS CASES
    # ───────────────────────────────────────────────────────────
    def test_dumps_is_canonical(self) -> None:
        """Verify sorted keys, two-space indent and a trailing newline."""
        text = self._reports.dumps(self._PAYLOAD)

        assert text.endswith("}\n")
        assert text.index('"entries"') < text.index('"name"') < text.index('"total"')
        assert text.index('"layer1"') < text.index('"layer2"')
        assert json.loads(text) == self._PAYLOAD

    def test_write_json_is_byte_identical(self) -> None:
        """Verify the same payload written twice gives identical bytes, creating folders as needed."""
        first = self._reports.write_json(Path(self._folder.name) / "a" / "report.json", self._PAYLOAD)
        second = self._reports.write_json(Path(self._folder.name) / "b" / "report.json", dict(self._PAYLOAD))

        assert first.read_bytes() == second.read_bytes()

    def test_write_csv_rows(self) -> None:
        """Verify one header line plus one line per row, columns in first-row order."""
        path = self._reports.write_csv(Path(self._folder.name) / "report.csv", self._ROWS)

        lines = path.read_text(encoding="utf-8").splitlines()

        assert lines == ["layer,params", "layer1,80", "layer2,120"]

    # ───────────────────────────────────────────────────────────
    # EDGE CASES
    # ───────────────────────────────────────────────────────────
    def test_write_csv_empty_rows(self) -> None:
        """Verify an empty row list writes an empty file."""
        path = self._reports.write_csv(Path(self._folder.name) / "empty.csv", [])

        assert path.read_text(encoding="utf-8") == ""

    def test_dumps_rejects_nan(self) -> None:
        """Verify non-finite values are refused rather than written as NaN."""
        with self.assertRaises(ValueError):
            self._reports.dumps({"loss": float("nan")})
