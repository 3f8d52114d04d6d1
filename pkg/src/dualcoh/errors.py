"""Exception taxonomy shared by the whole package.

The CLI maps these onto its exit-code contract: invalid input -> 2,
resource caps -> 3, mathematical inconsistency -> 4.
"""


class InvalidPresentationError(ValueError):
    """A ring presentation, morphism, or family parameter set is malformed."""


class CapExceededError(RuntimeError):
    """A construction would exceed the configured per-degree monomial cap."""


class InconsistentPresentationError(RuntimeError):
    """A presentation fails a consistency check it was promised to satisfy.

    Raised when nonzero classes survive above the expected top degree, when
    the top degree is not one-dimensional, or when a dual-class linear
    system has no solution (which signals a wrong morphism or presentation).
    """
