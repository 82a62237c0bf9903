"""Exception taxonomy shared across gammalab.

Built-in ``OverflowError`` is reused for floating-range overflow; everything
else derives from :class:`GammalabError` so callers can catch the package
family in one clause.
"""

__all__ = [
    "GammalabError",
    "DomainError",
    "PoleError",
    "ConvergenceError",
    "EmptyGridError",
    "ResourceError",
    "TraceDepthError",
    "DepthError",
]


class GammalabError(Exception):
    """Base class for all gammalab exceptions."""


class DomainError(GammalabError, ValueError):
    """Input lies outside the documented domain of an operation."""


class PoleError(GammalabError, ZeroDivisionError):
    """Evaluation was requested at (or within tolerance of) a pole."""


class ConvergenceError(GammalabError, ArithmeticError):
    """An iterative scheme exhausted its budget before reaching tolerance."""


class EmptyGridError(GammalabError, ValueError):
    """A verification grid contained no admissible sample points."""


class ResourceError(GammalabError, RuntimeError):
    """A configured node/cardinality budget was exceeded."""


class TraceDepthError(GammalabError, RuntimeError):
    """A recorded decomposition does not cover the requested point."""


class DepthError(GammalabError, RuntimeError):
    """A descent/escape iteration exceeded its configured depth bound."""
