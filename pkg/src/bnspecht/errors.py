"""Exception types shared across the package."""


class BnSpechtError(Exception):
    """Base class for all package errors."""


class SizeMismatchError(BnSpechtError, ValueError):
    """Two (bi)partitions or a polynomial/point pair have incompatible sizes."""


class AmbientMismatchError(BnSpechtError, ValueError):
    """Polynomials live in rings with a different number of variables."""


class EmptyOrbitError(BnSpechtError, ValueError):
    """A representative was requested for an empty orbit set."""


class NotApplicableError(BnSpechtError, ValueError):
    """A monomial's profile violates the variable-count hypothesis."""


class NoConclusionError(BnSpechtError, ValueError):
    """No qualifying monomial was detected, so no class can be excluded."""


class ResourceLimitExceeded(BnSpechtError, RuntimeError):
    """A configured cap (basis size, term count, coset count) was hit."""


class ParseError(BnSpechtError, ValueError):
    """Malformed bipartition or polynomial text; carries the input position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
