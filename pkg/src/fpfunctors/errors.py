"""Exception types raised by the library and mapped to CLI exit codes."""


class FPError(Exception):
    """Base class for all library errors."""


class ZeroFactorizationError(FPError, ValueError):
    """Raised when asked to factor zero."""


class DimensionError(FPError, ValueError):
    """Matrix shapes do not fit together."""


class NotWellDefinedError(FPError, ValueError):
    """A generator-level matrix does not descend to the quotient modules."""


class InfiniteModuleError(FPError, ValueError):
    """A finite-length quantity was requested for a module with free part."""


class PreconditionError(FPError, ValueError):
    """An operation precondition is violated (e.g. a non-closed set)."""


class NotClosedError(PreconditionError):
    """A set of Ziegler points that is not closed was passed where one is required."""


class MalformedInputError(FPError, ValueError):
    """Input data (JSON or module DSL) could not be parsed."""


class UnsupportedRingError(FPError, ValueError):
    """The ring tag in an input file is not supported."""
