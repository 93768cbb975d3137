"""Exception hierarchy. Each class carries the CLI exit code it maps to."""

from __future__ import annotations


class NetPHError(Exception):
    exit_code = 1


class ParseError(NetPHError, ValueError):
    """Malformed input file."""

    exit_code = 2

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class StructuralError(NetPHError, ValueError):
    """An invariant of a graph, complex or filtration is violated."""

    exit_code = 3


class CalibrationError(NetPHError, RuntimeError):
    exit_code = 4


class EmptyScoresError(NetPHError, ValueError):
    """Raised when edge weights are requested for a graph with no edges."""

    exit_code = 3
