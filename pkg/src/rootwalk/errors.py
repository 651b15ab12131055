"""Exception hierarchy.

Two families: :class:`ParseError` for malformed text input and
:class:`PreconditionError` for operations applied outside their domain.
The CLI maps the first to exit status 2 and the second to exit status 1.
"""

from __future__ import annotations


class RootwalkError(Exception):
    pass


class ParseError(RootwalkError, ValueError):
    pass


class UsageError(RootwalkError, ValueError):
    """Bad configuration, unknown names, caps exceeded."""


class CapExceeded(UsageError):
    pass


class UnknownMap(UsageError):
    pass


class UnknownStat(UsageError):
    pass


class NotClosed(UsageError):
    """Step set not stable under single-coordinate negation."""


class PreconditionError(RootwalkError, ValueError):
    pass


class StepNotInSet(PreconditionError):
    pass


class MinimumIsZero(PreconditionError):
    pass


class NotInImage(PreconditionError):
    pass


class BadEndpoint(PreconditionError):
    pass


class NotPositive(PreconditionError):
    pass


class NoSuchStep(PreconditionError):
    pass


class EmptySequence(PreconditionError):
    pass


class NotUgly(PreconditionError):
    pass


class NotBad(PreconditionError):
    pass


class NoWinner(PreconditionError):
    pass


class NotEnoughVisits(PreconditionError):
    pass


class NoNegativeVisit(PreconditionError):
    pass


class NoFlips(PreconditionError):
    pass


class BadInput(PreconditionError):
    pass


class EvenLength(PreconditionError):
    pass


class OddLength(PreconditionError):
    pass


class NonUnitConstantTerm(PreconditionError):
    pass
