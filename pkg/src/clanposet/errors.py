"""Exception types shared across the package.

Every class carries a short ``code`` string which the command line tool
echoes in its machine readable error objects.
"""

from __future__ import annotations


class ClanposetError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "Error"


class UnmatchedPairError(ClanposetError):
    """A pair label occurs a number of times different from two."""

    code = "UnmatchedPair"


class EmptyInputError(ClanposetError):
    code = "EmptyInput"


class BadTokenError(ClanposetError):
    code = "BadToken"


class LimitExceededError(ClanposetError):
    code = "LimitExceeded"


class InternalMismatchError(ClanposetError):
    """A structural sanity check failed that no valid clan can fail.

    Seeing this error means a Clan was built by bypassing its constructor.
    """

    code = "InternalMismatch"


class ShapeMismatchError(ClanposetError):
    code = "ShapeMismatch"


class ShrinkNotAllowedError(ClanposetError):
    code = "ShrinkNotAllowed"


class NotABaseClanError(ClanposetError):
    code = "NotABaseClan"


class RequiresPGeQError(ClanposetError):
    code = "RequiresPGeQ"


class NotInDenseSectError(ClanposetError):
    code = "NotInDenseSect"


class NotRectangularError(ClanposetError):
    code = "NotRectangular"


class NonPositiveWeightError(ClanposetError):
    code = "NonPositiveWeight"


class WeightOutOfRangeError(ClanposetError):
    code = "WeightOutOfRange"


class UnknownElementError(ClanposetError):
    code = "UnknownElement"
