"""Exception hierarchy shared by all gex modules."""


class GexError(Exception):
    """Base class for every error raised by gex."""


class DomainError(GexError, ValueError):
    """An argument lies outside the domain where the construction is defined."""


class ConstructionError(GexError):
    """The face-pairing data could not be assembled into a triangulation."""


class InvariantViolation(GexError):
    """A computed object disagrees with a structural invariant.

    ``payload`` carries whatever offending object triggered the failure
    (an edge class, a residual, a certificate) so callers can report it.
    """

    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload


class DevelopingError(InvariantViolation):
    """The cusp cross-section failed to develop as a Euclidean torus."""


class ConvergenceError(GexError):
    """Adaptive quadrature ran out of subdivisions before meeting its tolerance."""

    def __init__(self, message, estimate, error_bound):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound
