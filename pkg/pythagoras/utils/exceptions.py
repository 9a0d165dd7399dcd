""" exceptions.py -- Custom exceptions for Pythagoras.

    Language: Python 3.9
"""

from typing import Optional


class PythagorasError(Exception):
    """Base error class."""


class DomainError(PythagorasError, ValueError):
    """Container for inputs that fall outside the domain of an operation."""


class NoProperTriangleError(DomainError):
    """No proper triangle exists with the requested legs."""


class UsageError(PythagorasError):
    """Container for command-line usage errors. Maps to exit status 2."""


class CityNotFoundError(UsageError):
    """City name missing from the coordinate table."""


class FrameParseError(UsageError):
    """Frame file could not be parsed into a valid frame."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
