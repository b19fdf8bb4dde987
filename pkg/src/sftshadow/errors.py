"""Exception types raised across the package."""


class SftError(ValueError):
    """Base class for every error raised by :mod:`sftshadow`."""


class EmptyShift(SftError):
    """The presented shift space has no bi-infinite point."""


class NotTransitive(SftError):
    pass


class NotMixing(SftError):
    pass


class PQNotCoprime(SftError):
    pass


class NoPath(SftError):
    """No walk of the requested length exists.

    The ``spectrum`` attribute carries the full set of feasible lengths
    for the requested pair of symbols.
    """

    def __init__(self, message, spectrum=None):
        super().__init__(message)
        self.spectrum = spectrum


class DeltaTooLarge(SftError):
    pass


class SpacingTooSmall(SftError):
    pass


class HorizonTooLong(SftError):
    pass


class DecayFailure(SftError):
    """A tracing bound was violated at index ``m`` (``None`` if no sync)."""

    def __init__(self, message, m=None, value=None):
        super().__init__(message)
        self.m = m
        self.value = value


class ParseError(SftError):
    pass
