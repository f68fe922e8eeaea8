"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the physical or mathematical domain of an operation."""


class NoEntropicConnection(DomainError):
    """No admissible stationary connection exists across the bed step."""


class EmptyFeasibleRegion(DomainError):
    """A requested feasible set is empty (e.g. strip depth above its bound)."""
