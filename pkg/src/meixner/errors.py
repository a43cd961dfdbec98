"""Exception types shared across the package."""


class MeixnerError(Exception):
    """Base class for all package errors."""


class DomainError(MeixnerError, ValueError):
    """Argument outside the domain of a function."""


class PoleError(DomainError):
    """Argument at a pole or logarithmic singularity."""


class BranchCutError(DomainError):
    """Argument on a branch cut and no boundary side was given."""


class RegionError(MeixnerError, ValueError):
    """Point handed to a formula outside the region it is valid in."""


class QuadratureError(MeixnerError, RuntimeError):
    """Adaptive quadrature could not reach the requested tolerance."""
