"""Exception types shared across the package."""


class CliffsymError(Exception):
    """Base class for all library errors."""


class UsageError(CliffsymError, ValueError):
    """Invalid arguments: bad index, mismatched configurations, malformed input."""


class ResourceError(CliffsymError):
    """A request exceeds the enumeration bounds of the library."""


class InconsistencyError(CliffsymError, ArithmeticError):
    """An internal computation produced an impossible result."""


class NotInvertible(CliffsymError, ArithmeticError):
    """The element is not a unit."""


class NoSolution(CliffsymError, ArithmeticError):
    """A target vector is not in the span of the given vectors."""
