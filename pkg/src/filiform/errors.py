"""Exception types shared across the package."""


class FiliformError(Exception):
    """Base class for all package errors."""


class ParseError(FiliformError, ValueError):
    """Malformed scalar text or algebra record."""


class ShapeError(FiliformError, ValueError):
    """A structure tensor does not have the expected multiplication-table shape."""


class InvalidGroupElement(FiliformError, ValueError):
    """A pair (A, B) with A(A+B) = 0."""


class Unsupported(FiliformError):
    """The question falls outside the strata where complete invariants are known.

    ``stratum`` carries the (possibly coarse) stratum name when one is known,
    ``reason`` a short human-readable explanation.
    """

    def __init__(self, reason, stratum=None):
        super().__init__(reason)
        self.reason = reason
        self.stratum = stratum


class OracleError(FiliformError):
    """The basis-change oracle could not complete a transformation."""
