"""
Exception hierarchy for wlpkit.

Every error raised by the library derives from WlpError and, where one fits,
from the closest builtin so callers may catch either.
"""

from typing import Optional


class WlpError(Exception):
    """Base class for every error raised by wlpkit."""


class FieldMismatchError(WlpError, ValueError):
    """Operands live over different fields."""


class ScalarDivisionError(WlpError, ZeroDivisionError):
    """Division by the zero scalar."""


class ParseError(WlpError, ValueError):
    """
    Syntax error in a polynomial, ideal, scalar or module-specification text.

    Attributes:
        message: Human readable description without the location
        line: 1-based line number (None when unknown)
        column: 1-based column number (None when unknown)
    """

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        column: Optional[int] = None,
    ):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.line is None:
            if self.column is None:
                return self.message
            return f"{self.message} (column {self.column})"
        return f"{self.message} (line {self.line}, column {self.column})"


class NonArtinianError(WlpError, ValueError):
    """The ideal does not contain a power of x and a power of y."""


class ModuleConstructionError(WlpError, ValueError):
    """A module could not be built from the given data."""


class ShapeError(WlpError, ValueError):
    """Matrix or subspace dimensions do not fit together."""


class PreconditionError(WlpError, ValueError):
    """An operation was called on an input outside its domain."""


class DeterminantNotApplicableError(PreconditionError):
    """The determinant method only handles square pairs generated in degree 0."""


class UnknownMethodError(WlpError, ValueError):
    """No decider is registered under the requested method name."""


class MethodDisagreementError(WlpError, RuntimeError):
    """Two deciders returned different verdicts for the same degree pair."""


__all__ = [
    "WlpError",
    "FieldMismatchError",
    "ScalarDivisionError",
    "ParseError",
    "NonArtinianError",
    "ModuleConstructionError",
    "ShapeError",
    "PreconditionError",
    "DeterminantNotApplicableError",
    "UnknownMethodError",
    "MethodDisagreementError",
]
