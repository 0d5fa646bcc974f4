from enums.exit_code import ExitCode
from tests.e2e.wrappers.cli import WrapperCli


class TestCliRfEmpirical(WrapperCli):
    # ───────────────────────────────────────────────────────────
    # SUCCESS CASES
    # ───────────────────────────────────────────────────────────
    def test_rf_empirical_is_contained(self) -> None:
        """Verify the perturbation footprint stays inside the analytic coverage."""
        config = self.write_config("d2.json", {"type": "d2", "L": 3, "k": 2, "mode": "standard"})

        code = self.run_cli("rf-empirical", "--config", config, "--seed", "1", "--out", self.path("e.json"))
        result = self.read_json("e.json")

        assert code == ExitCode.OK.value
        assert result["contained"] is True
        assert set(result["empirical"]) <= set(result["analytic"])
        assert result["analytic"] == [-7, -6, -5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6, 7]

    # ───────────────────────────────────────────────────────────
    # EDGE CASES
    # ───────────────────────────────────────────────────────────
    def test_rf_empirical_bad_position_exits_2(self) -> None:
        """Verify a position outside the perturbed input is an argument error."""
        config = self.write_config("d2.json", {"type": "d2", "L": 2, "k": 2})

        code = self.run_cli("rf-empirical", "--config", config, "--position", "999", "--out", self.path("e.json"))

        assert code == ExitCode.CONFIGURATION_ERROR.value
