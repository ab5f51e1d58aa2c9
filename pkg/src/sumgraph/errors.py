"""Exception types shared across the package."""

from __future__ import annotations


class SumGraphError(Exception):
    """Base class for all errors raised by :mod:`sumgraph`."""


class FormatError(SumGraphError, ValueError):
    """A text file could not be parsed.

    ``line`` is 1-based and ``None`` when the problem is not tied to a line.
    """

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}".strip() if where else message)


class SizeLimitError(SumGraphError):
    """The requested operation is not supported at this size."""


class InvalidLabelingError(SumGraphError, ValueError):
    """An operation that needs a valid sum labeling received an invalid one."""
