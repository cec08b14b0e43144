"""Exception hierarchy shared by every backend.

``DomainError`` subclasses map to CLI exit code 1, ``ParseError`` to exit code 2.
"""

from __future__ import annotations


class InjSpecError(Exception):
    pass


class DomainError(InjSpecError):
    """A well-formed request the mathematics refuses."""


class ParseError(InjSpecError, ValueError):
    def __init__(self, message: str, position: int | None = None, text: str | None = None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class InvalidPoset(DomainError):
    pass


class MixedRings(DomainError):
    pass


class NotMonomial(DomainError):
    pass


class Unsupported(DomainError):
    pass


class NotPrime(DomainError):
    pass


class NotADomain(DomainError):
    pass


class NotAQuotient(DomainError):
    pass


class NotInImage(DomainError):
    pass


class MixedAlgebras(DomainError):
    pass


class InvalidAlgebra(DomainError):
    pass


class InvalidRepresentation(DomainError):
    pass


class MalformedSet(DomainError):
    pass


class UnknownPoint(DomainError):
    pass


class BadRange(DomainError):
    pass


class EliminationFailure(DomainError):
    pass


class BadParameter(DomainError):
    pass


class NotT0(DomainError):
    def __init__(self, pairs):
        self.pairs = list(pairs)
        super().__init__(f"mutual specialisation between distinct points: {self.pairs}")


class CdUnavailable(DomainError):
    pass
