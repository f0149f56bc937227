"""Exception hierarchy shared by all modules.

Every error raised on a contract violation derives from ZetaArgboundError so
callers (notably the CLI) can map failures to exit codes in one place.
"""


class ZetaArgboundError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ZetaArgboundError, ValueError):
    """Argument outside the documented domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested at (or too close to) a pole."""


class NearSingularityError(ZetaArgboundError):
    """Value would be dominated by a nearby zero; caller must reroute."""


class NonConvergenceError(ZetaArgboundError):
    """Series or quadrature failed to reach the requested tolerance
    within its term/subdivision budget."""


class CoverageError(ZetaArgboundError):
    """A precomputed table (zero ordinates or von Mangoldt values) does
    not extend far enough for the requested evaluation."""


class ResourceError(ZetaArgboundError):
    """Requested table would exceed the configured memory budget."""


class ZeroTableFormatError(ZetaArgboundError):
    """Zero-ordinate file failed validation (parse, ordering, emptiness)."""


class AtOrdinateError(ZetaArgboundError):
    """Evaluation point coincides with a zero ordinate where the operation
    is undefined without the two-sided midpoint convention."""
