class HookModError(Exception):
    """Base class for errors raised by this package."""


class ScaleExceeded(HookModError):
    """A size guard was hit before an exponential computation started."""


class ParseError(HookModError, ValueError):
    """Malformed monomial, partition or permutation text."""


class VerificationError(HookModError):
    """An internal invariant or cross-check failed."""
