"""Exception hierarchy shared by every module."""


class SNCCCError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(SNCCCError, ValueError):
    """Shapes, lengths or parameters are inconsistent."""


class AlphabetError(InvalidInputError):
    """An entry lies outside the declared alphabet."""


class UnsupportedError(InvalidInputError):
    """A generator was asked for a parameter it cannot produce."""


class DocumentError(InvalidInputError):
    """A code-set or recipe document is malformed.

    ``locus`` names the offending line or field, e.g. ``"sets[0][2][1]"``.
    """

    def __init__(self, message, locus=None):
        self.locus = locus
        if locus is not None:
            message = f"{message} (at {locus})"
        super().__init__(message)


class SeedVerificationError(InvalidInputError):
    """A seed failed the CCC check; ``violation`` is the first failing cell."""

    def __init__(self, message, violation=None):
        self.violation = violation
        super().__init__(message)


class ConstructionRefused(InvalidInputError):
    """A permutation family does not satisfy the value-disjointness condition."""


class InfeasibleError(SNCCCError):
    """The requested construction cannot exist for these parameters."""


class NotFoundError(InfeasibleError):
    """An exhaustive search finished without a witness."""
