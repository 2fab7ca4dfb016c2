"""Exception types shared across the package."""

from .rootsystem import InvalidType


class NonReducedWord(ValueError):
    pass


class NotCominuscule(ValueError):
    pass


class NonDominantWeight(ValueError):
    pass


class WrongType(ValueError):
    pass


class InvalidSubdiagram(ValueError):
    pass


class ConsistencyFailure(AssertionError):
    pass


class NonUniqueMaximum(AssertionError):
    pass


class InternalContradiction(AssertionError):
    pass


class PreconditionFailed(ValueError):
    pass


class JacobiFailure(AssertionError):
    pass


class NotInM(ValueError):
    pass


class DegenerateWedge(ValueError):
    pass


class OracleTooLarge(RuntimeError):
    pass


class ContentMismatch(ValueError):
    pass


class OutOfBox(ValueError):
    pass


class ExcludedCase(ValueError):
    pass


class UnknownFormat(ValueError):
    pass


__all__ = [
    "InvalidType", "NonReducedWord", "NotCominuscule", "NonDominantWeight",
    "WrongType", "InvalidSubdiagram", "ConsistencyFailure", "NonUniqueMaximum",
    "InternalContradiction", "PreconditionFailed", "JacobiFailure", "NotInM",
    "DegenerateWedge", "OracleTooLarge", "ContentMismatch", "OutOfBox",
    "ExcludedCase", "UnknownFormat",
]
