from typing import Any, Optional


class LongRefError(Exception):
    """Root of every error raised on purpose by longref."""


class GraphError(LongRefError, ValueError):
    def __init__(self, message: str, pair: Optional[tuple[int, int]] = None):
        super().__init__(message)
        self.pair = pair


class Graph6Error(LongRefError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.reason = message
        self.offset = offset


class ColouringError(LongRefError, ValueError):
    pass


class NotLongRefinementError(LongRefError, ValueError):
    pass


class LrStringError(LongRefError, ValueError):
    def __init__(self, message: str, rule: str, position: Optional[int] = None):
        where = "" if position is None else f" at position {position}"
        super().__init__(f"{message} [{rule}]{where}")
        self.rule = rule
        self.position = position


class ConstructionError(LongRefError):
    pass


class UnknownFamilyError(LongRefError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class TableDataError(LongRefError, ValueError):
    def __init__(
        self,
        message: str,
        table: Optional[int] = None,
        variant: Optional[int] = None,
        row: Optional[str] = None,
    ):
        super().__init__(message)
        self.table = table
        self.variant = variant
        self.row = row


class BudgetExceededError(LongRefError):
    def __init__(self, message: str, partial: Any = None):
        super().__init__(message)
        self.partial = partial
