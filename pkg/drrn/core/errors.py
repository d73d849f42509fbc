"""
Exception hierarchy for the DRRN package.

Every concrete error also derives from ValueError so callers that only care
about "bad input" can catch broadly.
"""
from typing import List, Optional


class DrrnError(Exception):
    """Base class for all package errors."""


class GameParseError(DrrnError, ValueError):
    """A game file could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        location = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(f"{location}{message}")


class GameValidationError(DrrnError, ValueError):
    """A parsed game violates one or more structural invariants."""

    def __init__(self, violations: List[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class EpisodeError(DrrnError, ValueError):
    """Illegal use of an episode handle (bad choice, step after the end)."""


class DimensionMismatchError(DrrnError, ValueError):
    """Array shapes do not chain or do not match the model."""


class ConfigError(DrrnError, ValueError):
    """An experiment or agent configuration is malformed."""


class AnalysisError(DrrnError, ValueError):
    """An analysis cannot be computed from the given data."""
