"""Exception hierarchy shared across the package."""


class FreeharmError(Exception):
    """Base class for all library errors."""


class InputError(FreeharmError):
    """Malformed or out-of-range input (bad letters, bad JSON, bad config)."""


class DomainError(FreeharmError):
    """An operation was asked to leave the ball on which its data lives."""


class PositivityError(FreeharmError):
    """A Gram matrix required to be (strictly) positive is not."""


class SingularityError(FreeharmError):
    """An eigenvalue fell below the tolerance of a spectral operation."""

    def __init__(self, message: str, eigenvalue: float):
        super().__init__(message)
        self.eigenvalue = eigenvalue


class ContourError(FreeharmError):
    """The spectrum escapes the region enclosed by an integration contour."""


class CompletionError(FreeharmError):
    """A one-step completion problem is ill posed."""


class RepresentationError(FreeharmError):
    """Supplied operators fail to act as a homomorphism within tolerance."""


class NonConvergenceError(FreeharmError):
    """An iterative extension did not reach its residual tolerance."""

    def __init__(self, message: str, residual: float, result=None):
        super().__init__(message)
        self.residual = residual
        self.result = result


class GeneratorBugError(FreeharmError):
    """An instance generator produced data violating its own invariants."""
