import unittest

from helpers.format_parameter_count import format_parameter_count


class TestFormatParameterCount(unittest.TestCase):
    # ───────────────────────────────────────────────────────────
    # SUCCESS CASES
    # ───────────────────────────────────────────────────────────
    def test_format_parameter_count_uses_largest_unit(self) -> None:
        """Verify counts are abbreviated with the largest fitting unit."""
        test_cases = [
            (200, "200"),
            (345_000, "345K"),
            (9_700_000, "9.7M"),
            (10_920_049, "10.9M"),
            (1_200_000_000, "1.2B"),
        ]

        for count, expected in test_cases:
            with self.subTest(count=count):
                assert format_parameter_count(count) == expected

    # ───────────────────────────────────────────────────────────
    # BOUNDARY CASES
    # ───────────────────────────────────────────────────────────
    def test_format_parameter_count_unit_boundaries(self) -> None:
        """Verify the switch points between units."""
        assert format_parameter_count(999) == "999"
        assert format_parameter_count(1_000) == "1K"
        assert format_parameter_count(1_000_000) == "1.0M"
