"""Exception types shared across the package."""


class PosetError(ValueError):
    """Raised when data fed to a poset constructor is not a valid partial order."""


class MapError(ValueError):
    """Raised when a point map between posets is not order-preserving."""


class SizeLimitExceeded(RuntimeError):
    """An enumeration or search exceeded its configured budget.

    Budgets are hard limits: hitting one raises instead of silently
    truncating results.
    """


class GroupError(ValueError):
    """Raised when a multiplication table fails the group axioms."""


class GeneratingSetError(ValueError):
    """Base class for invalid generating-set input."""


class ContainsIdentityError(GeneratingSetError):
    pass


class DuplicateGeneratorError(GeneratingSetError):
    pass


class DoesNotGenerateError(GeneratingSetError):
    """The proposed generators span a proper subgroup (kept as ``witness``)."""

    def __init__(self, message: str, witness):
        super().__init__(message)
        self.witness = witness


class ConstructionError(ValueError):
    """Raised when a space-construction step is asked for something undefined."""
