import unittest

from enums.dilation_mode import DilationMode
from errors import ArgumentError
from helpers.parse import parse_int, parse_int_list, parse_modes, parse_optional_float


class TestParse(unittest.TestCase):
    # ───────────────────────────────────────────────────────────
    # CONSTANTS
    # ───────────────────────────────────────────────────────────
    _INT_POSITIVE: int = 42
    _STRING_INT_NEGATIVE: str = "-10"
    _STRING_FLOAT: str = "3.99"
    _STRING_INVALID: str = "invalid"

    # ───────────────────────────────────────────────────────────
    # PARSE INT
    # ───────────────────────────────────────────────────────────
    def test_parse_int_accepts_numbers_and_strings(self) -> None:
        """Verify parse_int handles ints, floats, numeric strings and None."""
        test_cases = [
            (self._INT_POSITIVE, 42),
            (self._STRING_INT_NEGATIVE, -10),
            (self._STRING_FLOAT, 3),
            (2.7, 2),
            (None, 0),
        ]

        for value, expected in test_cases:
            with self.subTest(value=value):
                assert parse_int(value) == expected

    def test_parse_int_invalid_raises(self) -> None:
        """Verify non-numeric values raise ArgumentError."""
        with self.assertRaises(ArgumentError):
            parse_int(self._STRING_INVALID)

    # ───────────────────────────────────────────────────────────
    # PARSE OPTIONAL FLOAT
    # ───────────────────────────────────────────────────────────
    def test_parse_optional_float_empty_returns_none(self) -> None:
        """Verify None and empty strings parse to None."""
        assert parse_optional_float(None) is None
        assert parse_optional_float("") is None

    def test_parse_optional_float_parses_numbers(self) -> None:
        """Verify numeric strings parse to floats."""
        assert parse_optional_float("1e-6") == 1e-6

    def test_parse_optional_float_invalid_raises(self) -> None:
        """Verify non-numeric strings raise ArgumentError."""
        with self.assertRaises(ArgumentError):
            parse_optional_float(self._STRING_INVALID)

    # ───────────────────────────────────────────────────────────
    # PARSE INT LIST
    # ───────────────────────────────────────────────────────────
    def test_parse_int_list_expands_ranges(self) -> None:
        """Verify comma lists and inclusive ranges."""
        test_cases = [
            ("0", [0]),
            ("0:4", [0, 1, 2, 3, 4]),
            ("-2:1,5", [-2, -1, 0, 1, 5]),
            ("3, 7 ,", [3, 7]),
        ]

        for value, expected in test_cases:
            with self.subTest(value=value):
                assert parse_int_list(value) == expected

    def test_parse_int_list_empty_range_raises(self) -> None:
        """Verify descending ranges raise ArgumentError."""
        with self.assertRaises(ArgumentError):
            parse_int_list("4:1")

    # ───────────────────────────────────────────────────────────
    # PARSE MODES
    # ───────────────────────────────────────────────────────────
    def test_parse_modes_is_case_insensitive(self) -> None:
        """Verify mode lists parse in order regardless of case."""
        assert parse_modes("Multi, none") == [DilationMode.MULTI, DilationMode.NONE]

    def test_parse_modes_unknown_raises(self) -> None:
        """Verify unknown mode names raise ArgumentError."""
        with self.assertRaises(ArgumentError):
            parse_modes("multi,dense")
