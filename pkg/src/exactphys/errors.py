"""Exception taxonomy shared across the package.

Domain failures (bad values, unknown names) and resource failures (a
search budget ran out) are kept on separate branches so callers and the
CLI can map them to distinct exit statuses.
"""

from __future__ import annotations


class ExactPhysError(Exception):
    """Base class for all package errors."""


class DomainError(ExactPhysError):
    """A value is outside an operation's domain."""


class DecodeError(DomainError):
    """A code does not decode to the requested kind of value."""


class RangeError(DomainError):
    """A numeric argument violates a documented bound."""


class UnknownObservable(DomainError):
    """An observable name is not part of the model being queried."""


class NotAState(DomainError):
    """A code was used as a state of a model that does not contain it."""


class EmptyCondition(DomainError):
    """A conditional probability was requested with an empty condition set."""


class MismatchedObservables(DomainError):
    """Ensemble components do not share a common observable name list."""


class MalformedState(DomainError):
    """A state code is structurally unusable for the requested operation."""


class NonterminatingSum(DomainError):
    """A probability sum failed to reach 1 within the configured value bound."""


class TruncatedInput(DomainError):
    """A truncated oracle was evaluated past its defined prefix."""


class SizeLimit(DomainError):
    """A combinatorial search was invoked beyond its supported size."""


class ParseError(DomainError):
    """Input text could not be parsed; carries position information when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class ValidationError(DomainError):
    """A parsed structure violates its format contract."""


class Inconclusive(ExactPhysError):
    """A bounded semi-decidable search ended without an answer.

    Raised instead of returning a wrong or silently-truncated result.
    """


class OutOfFuel(Inconclusive):
    """The step budget of a search was exhausted."""
