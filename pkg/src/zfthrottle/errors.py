"""Exception types shared across the package."""


class GraphError(ValueError):
    """Base class for invalid graph input or operation."""


class ParseError(GraphError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class PreconditionError(GraphError):
    pass


class CapacityError(GraphError):
    """An exhaustive search was requested beyond its size cap."""


class DomainError(GraphError):
    pass


class ForceSetError(GraphError):
    """A set of forces cannot be performed from its initial blue set."""


class WitnessError(GraphError):
    pass


class NotForcingError(ArithmeticError):
    """Arithmetic was attempted on the NOT_FORCING sentinel."""
