from enums.exit_code import ExitCode
from tests.e2e.wrappers.cli import WrapperCli


class TestCliAnalyzeRf(WrapperCli):
    # ───────────────────────────────────────────────────────────
    # CONSTANTS
    # ───────────────────────────────────────────────────────────
    _CONFIG = {"type": "d2", "L": 2, "k": 1, "mode": "standard"}

    # ───────────────────────────────────────────────────────────
    # SUCCESS CASES
    # ───────────────────────────────────────────────────────────
    def test_analyze_rf_matches_fixture(self) -> None:
        """Verify the standard-dilated two-layer report, blind spots included."""
        config = self.write_config("d2.json", self._CONFIG)

        code = self.run_cli("analyze-rf", "--config", config, "--out", self.path("report.json"))

        assert code == ExitCode.OK.value
        assert self.read_json("report.json") == self.get_json_data("analyze_rf_standard_expected.json")

    def test_analyze_rf_is_byte_deterministic(self) -> None:
        """Verify two runs write identical bytes."""
        config = self.write_config("d2.json", self._CONFIG)

        self.run_cli("analyze-rf", "--config", config, "--out", self.path("first.json"))
        self.run_cli("analyze-rf", "--config", config, "--out", self.path("second.json"))

        assert self.read_bytes("first.json") == self.read_bytes("second.json")

    def test_analyze_rf_mode_override(self) -> None:
        """Verify --mode multi removes every blind spot and writes one CSV row per group."""
        config = self.write_config("d2.json", self._CONFIG)

        outputs = ("--out", self.path("r.json"), "--csv", self.path("r.csv"))
        code = self.run_cli("analyze-rf", "--config", config, "--mode", "multi", *outputs)
        report = self.read_json("r.json")
        rows = self.read_bytes("r.csv").decode("utf-8").splitlines()

        assert code == ExitCode.OK.value
        assert report["alias"] is False
        assert report["config"]["mode"] == "multi"
        assert len(rows) == 1 + 3

    # ───────────────────────────────────────────────────────────
    # EDGE CASES
    # ───────────────────────────────────────────────────────────
    def test_analyze_rf_invalid_config_exits_2(self) -> None:
        """Verify an even kernel is a configuration error."""
        config = self.write_config("bad.json", {"type": "d2", "L": 2, "k": 1, "kernel": [2, 2]})

        assert self.run_cli("analyze-rf", "--config", config, "--out", self.path("r.json")) == 2

    def test_analyze_rf_unknown_preset_exits_2(self) -> None:
        """Verify an unknown preset name is a configuration error."""
        assert self.run_cli("analyze-rf", "--preset", "d3net_xl", "--out", self.path("r.json")) == 2
