"""Exception types shared across the package."""


class TwistBakerError(Exception):
    """Base class for all twistbaker errors."""


class OutsideDomainError(TwistBakerError, ValueError):
    """A point lies outside the phase space X = [-1,1] x [0,1]^(m-1)."""


class SingularWordError(TwistBakerError, ValueError):
    """The all-L word has no isolated periodic point.

    Its fixed set is the whole face x1 = -1, so the linear system for a
    periodic point is singular by construction.
    """


class InvariantViolationError(TwistBakerError, RuntimeError):
    """An internal exactness invariant failed; results cannot be trusted."""


class ResourceCapError(TwistBakerError, RuntimeError):
    """A requested computation exceeds the configured resource cap."""


class EmptyClassError(TwistBakerError, ValueError):
    """The requested eigenvalue class has no periodic points at this period."""


class DegenerateSeedError(TwistBakerError, ValueError):
    """Orbit seed rejected: even denominator, or on the fixed face x1 = -1."""
