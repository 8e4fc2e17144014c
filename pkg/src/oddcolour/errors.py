"""Exception types shared across the package."""


class OddColouringError(Exception):
    """Base class for every error raised by this package."""


class InfeasibleError(OddColouringError):
    """The graph has a component of odd order, so no odd colouring exists."""

    def __init__(self, message, component=None):
        super().__init__(message)
        self.component = component


class PreconditionError(OddColouringError, ValueError):
    """An argument violates a documented precondition."""


class ClassError(OddColouringError):
    """The input lies outside the graph class an algorithm is proven for."""


class ReductionNotFoundError(ClassError):
    """No pendant-twin pair or light edge exists in some recursive subgraph."""

    def __init__(self, message, vertices=()):
        super().__init__(message)
        self.vertices = tuple(vertices)


class NotAModulePartitionError(PreconditionError):
    def __init__(self, message, parts=None):
        super().__init__(message)
        self.parts = parts


class NotProperError(ClassError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class RepresentationError(PreconditionError):
    """An interval representation does not match its graph."""


class SizeError(OddColouringError):
    """Input is larger than the configured exact-solver cap."""


class InternalError(OddColouringError, AssertionError):
    """A proven invariant failed; this is a bug, not bad input."""
