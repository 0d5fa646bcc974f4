from enum import IntEnum, unique


@unique
class ExitCode(IntEnum):
    """Process exit codes of the d3kit command line."""

    OK = 0
    CHECK_FAILED = 1
    CONFIGURATION_ERROR = 2

    @property
    def is_success(self) -> bool:
        return self is ExitCode.OK
