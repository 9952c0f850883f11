"""Exception types shared across the toolkit."""


class LieparError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidTypeError(LieparError):
    """Malformed or unsupported Cartan type label."""


class ReducibleError(LieparError):
    """An operation requiring an irreducible root system got a product."""


class BudgetError(LieparError):
    """An enumeration would exceed the configured element budget."""


class NotMinimalError(LieparError):
    """A Weyl element was expected to be a minimal double-coset representative."""


class InfeasibleError(LieparError):
    """No strictly convex support function exists within the search grid."""
