"""Exception types shared across the package."""


class WormboundError(Exception):
    """Base class for all package-specific failures."""


class InputError(WormboundError, ValueError):
    """A value violates an operation's input contract."""


class PlanError(WormboundError, ValueError):
    """A search plan or stage is structurally invalid."""


class CsvFormatError(WormboundError, ValueError):
    """A CSV input is malformed; `row` is the offending 1-based line."""

    def __init__(self, message: str, row: int):
        super().__init__(f"row {row}: {message}")
        self.row = row
