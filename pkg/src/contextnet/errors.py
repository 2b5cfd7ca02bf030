"""Exception types shared across the package."""

from __future__ import annotations


class ContextNetError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(ContextNetError):
    """Vectors of incompatible (or unexpected) dimensions were combined."""


class NotNormalized(ContextNetError):
    """An operation required unit-norm input but received something else."""


class DegenerateSpan(ContextNetError):
    """Input vectors do not span a subspace of the required dimension."""


class OutOfDomain(ContextNetError):
    """A probability parameter lies on or too close to a forbidden boundary."""


class MissingAssignment(ContextNetError):
    """A network node has no vector assigned to it."""


class IncompleteContext(ContextNetError):
    """Outcome vectors do not form a complete orthonormal measurement basis."""


class EmptyChain(ContextNetError):
    """A sequential measurement needs at least one projection step."""


class EmptyTrials(ContextNetError):
    """Sampling needs a positive number of trials."""


#: Probability parameters this close to 0 or 1 are rejected: the scenario
#: constructions lose required non-orthogonality there and some closed-form
#: denominators vanish in the limit.
BOUNDARY_MARGIN = 1e-9


def require_interior(value: float, name: str, margin: float = BOUNDARY_MARGIN) -> float:
    """Return ``value`` if it lies strictly inside (0, 1) with the given margin.

    Raises:
        OutOfDomain: if ``value`` is within ``margin`` of 0 or 1 (or outside
            the unit interval altogether).
    """
    v = float(value)
    if not (margin <= v <= 1.0 - margin):
        raise OutOfDomain(
            f"{name}={v!r} must lie in [{margin}, {1.0 - margin}]; "
            "boundary values break the scenario's non-orthogonality requirements"
        )
    return v
