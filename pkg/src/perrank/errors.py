"""Exception types shared across the package."""


class PerRankError(Exception):
    """Base class for every error raised by this package."""


class InputError(PerRankError, ValueError):
    """Malformed or out-of-contract input (bad shape, bad entries, bad file)."""


class ResourceError(PerRankError):
    """A size or enumeration cap was exceeded."""


class TheoremViolation(PerRankError):
    """An applicable theorem failed on a verified instance.

    Carries a serialisable reproducer so the offending instance can be replayed.
    """

    def __init__(self, message, reproducer=None):
        super().__init__(message)
        self.reproducer = reproducer
