"""Exception types shared across the package."""

from __future__ import annotations


class ParseError(ValueError):
    """An input file is malformed; the message carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class PreconditionError(ValueError):
    """An operation was invoked outside the regime it is proven for (e.g. girth too small)."""


class OracleLimitError(RuntimeError):
    """Exhaustive search was refused because the graph exceeds the configured size cap."""


class InvariantViolation(RuntimeError):
    """An internal certificate failed.

    Every run of the constructive pipeline re-checks the guarantees it relies
    on (properness, anchor slack, single recoloring, ...).  Seeing this
    exception on a girth->=9 input means a bug, not a bad input.
    """

    def __init__(self, message: str, *, step: str | None = None, vertex: int | None = None):
        details = []
        if step is not None:
            details.append(f"step={step}")
        if vertex is not None:
            details.append(f"vertex={vertex}")
        if details:
            message = f"{message} ({', '.join(details)})"
        super().__init__(message)
        self.step = step
        self.vertex = vertex
