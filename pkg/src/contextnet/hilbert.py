"""Complex state-vector primitives for small Hilbert spaces.

Everything operates on immutable complex vectors in fixed finite dimension
(2 to 4 in practice) using double precision with explicit tolerances:

* ``NORM_TOL`` (1e-12) for normalization checks,
* ``ORTH_TOL`` (1e-10) for orthogonality and rank decisions.

Constructions defined only up to a global phase (orthogonal complements,
basis completions) are made deterministic by the phase canon
``first-nonzero-real-positive``: the first component with magnitude above
``ORTH_TOL`` is rotated onto the positive real axis. Re-running any
construction on identical input is bit-identical.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from .errors import DegenerateSpan, DimensionMismatch, NotNormalized

NORM_TOL = 1e-12
ORTH_TOL = 1e-10
PHASE_CANON = "first-nonzero-real-positive"

#: Norm deviation beyond which inputs labeled "normalized" are rejected.
NORM_CHECK_TOL = 1e-10


class StateVector:
    """Immutable complex vector of fixed finite dimension.

    Represents either a measurement outcome or a prepared state. The
    component array is copied on construction and write-protected.
    """

    __slots__ = ("_components",)

    def __init__(self, components) -> None:
        v = np.array(components, dtype=np.complex128).reshape(-1)
        if v.size == 0:
            raise ValueError("a state vector needs at least one component")
        v.setflags(write=False)
        self._components = v

    @property
    def components(self) -> np.ndarray:
        """Read-only component array (complex128)."""
        return self._components

    @property
    def dim(self) -> int:
        return int(self._components.size)

    def norm(self) -> float:
        return float(np.linalg.norm(self._components))

    def is_normalized(self, tol: float = NORM_TOL) -> bool:
        return abs(self.norm() - 1.0) <= tol

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StateVector):
            return NotImplemented
        return self._components.shape == other._components.shape and bool(
            np.array_equal(self._components, other._components)
        )

    def __hash__(self) -> int:
        return hash(self._components.tobytes())

    def __repr__(self) -> str:
        body = np.array2string(self._components, separator=", ", precision=8)
        return f"StateVector({body})"


def basis_vector(dim: int, index: int) -> StateVector:
    """Standard basis vector e_index in the given dimension."""
    if not 0 <= index < dim:
        raise ValueError(f"basis index {index} out of range for dimension {dim}")
    v = np.zeros(dim, dtype=np.complex128)
    v[index] = 1.0
    return StateVector(v)


def _check_same_dim(u: StateVector, v: StateVector) -> None:
    if u.dim != v.dim:
        raise DimensionMismatch(f"dimensions differ: {u.dim} vs {v.dim}")


def inner(u: StateVector, v: StateVector) -> complex:
    """Inner product, conjugate-linear in the first argument.

    ``inner(u, v)`` equals ``sum(conj(u_i) * v_i)`` and satisfies
    ``inner(u, v) == conj(inner(v, u))``.

    Raises:
        DimensionMismatch: if the dimensions differ.
    """
    _check_same_dim(u, v)
    return complex(np.vdot(u.components, v.components))


def clamp_probability(value: float, slack: float = 1e-12) -> float:
    """Clamp a value into [0, 1], allowing only ``slack`` of round-off spill.

    Values outside [-slack, 1 + slack] indicate a genuine bug upstream and
    raise ValueError rather than being silently clipped.
    """
    if value < -slack or value > 1.0 + slack:
        raise ValueError(f"value {value!r} is not a probability even within slack {slack}")
    return min(max(value, 0.0), 1.0)


def born_probability(prep: StateVector, outcome: StateVector) -> float:
    """Probability of obtaining ``outcome`` when the prepared state is ``prep``.

    Returns ``|inner(outcome, prep)|**2``, clamped into [0, 1].

    Raises:
        DimensionMismatch: if the dimensions differ.
        NotNormalized: if either vector's norm deviates from 1 by more
            than ``NORM_CHECK_TOL``.
    """
    _check_same_dim(prep, outcome)
    for name, vec in (("prep", prep), ("outcome", outcome)):
        if abs(vec.norm() - 1.0) > NORM_CHECK_TOL:
            raise NotNormalized(f"{name} has norm {vec.norm()!r}, expected 1")
    return clamp_probability(abs(inner(outcome, prep)) ** 2)


def tensor(u: StateVector, v: StateVector) -> StateVector:
    """Kronecker product of two vectors.

    Component ordering follows the standard Kronecker convention: for two
    two-level systems the product-basis order is (00, 01, 10, 11), i.e. the
    first factor indexes the slower axis. Inner products factorize:
    ``inner(tensor(a, b), tensor(c, d)) == inner(a, c) * inner(b, d)``.
    """
    return StateVector(np.kron(u.components, v.components))


def canonical_phase(components: np.ndarray) -> np.ndarray:
    """Rotate a vector's global phase to the canonical choice.

    The first component with magnitude above ``ORTH_TOL`` becomes real and
    positive (up to double-precision rounding in its imaginary part).
    """
    v = np.asarray(components, dtype=np.complex128)
    for c in v:
        if abs(c) > ORTH_TOL:
            return v * np.exp(-1j * np.angle(c))
    raise ValueError("cannot fix the phase of a numerically zero vector")


def orthogonal_complement(vectors: Sequence[StateVector], dim: int) -> StateVector:
    """Unit vector orthogonal to every input, canonically phased.

    The inputs must span a (dim - 1)-dimensional subspace so that the
    complement is unique up to phase. Rank is decided from the eigenvalues
    of the Gram matrix (basis-independent) with tolerance ``ORTH_TOL``.

    Raises:
        DimensionMismatch: if any input is not of dimension ``dim``.
        DegenerateSpan: if the inputs span fewer or more than dim - 1
            dimensions (complement not unique, or empty).
    """
    vecs = list(vectors)
    if not vecs:
        raise DegenerateSpan("no input vectors: complement is not unique")
    for v in vecs:
        if v.dim != dim:
            raise DimensionMismatch(f"input of dimension {v.dim}, expected {dim}")
    m = np.array([v.components for v in vecs])
    gram = m.conj() @ m.T
    eigs = np.linalg.eigvalsh(gram)
    rank = int(np.count_nonzero(eigs > ORTH_TOL))
    if rank != dim - 1:
        raise DegenerateSpan(
            f"inputs span a subspace of dimension {rank}, expected {dim - 1}"
        )
    # Rank is exactly dim - 1, so the null space of m is one-dimensional and
    # the last right-singular vector spans it.
    _, _, vh = np.linalg.svd(m)
    return StateVector(canonical_phase(vh[-1]))


def complete_context(vectors: Sequence[StateVector], dim: int) -> list[StateVector]:
    """Deterministically extend orthonormal vectors to a full orthonormal basis.

    Standard basis vectors are tried in index order; each candidate is
    projected onto the complement of the span so far and kept if its
    residual is non-negligible. New vectors are canonically phased, so the
    completion is reproducible bit for bit. The returned list starts with
    the inputs, unchanged.

    Raises:
        DimensionMismatch: if any input is not of dimension ``dim``.
        NotNormalized: if an input is not unit norm.
        DegenerateSpan: if the inputs are not mutually orthogonal.
    """
    basis: list[np.ndarray] = []
    for v in vectors:
        if v.dim != dim:
            raise DimensionMismatch(f"input of dimension {v.dim}, expected {dim}")
        if abs(v.norm() - 1.0) > NORM_CHECK_TOL:
            raise NotNormalized(f"input has norm {v.norm()!r}, expected 1")
        for prev in basis:
            if abs(np.vdot(prev, v.components)) > ORTH_TOL:
                raise DegenerateSpan("inputs are not mutually orthogonal")
        basis.append(v.components)

    completed = list(vectors)
    for i in range(dim):
        if len(basis) == dim:
            break
        candidate = np.zeros(dim, dtype=np.complex128)
        candidate[i] = 1.0
        for b in basis:
            candidate = candidate - b * np.vdot(b, candidate)
        residual = np.linalg.norm(candidate)
        if residual < 1e-6:
            continue
        candidate = candidate / residual
        # Second projection pass scrubs first-pass rounding.
        for b in basis:
            candidate = candidate - b * np.vdot(b, candidate)
        candidate = candidate / np.linalg.norm(candidate)
        new = StateVector(canonical_phase(candidate))
        basis.append(new.components)
        completed.append(new)
    if len(completed) != dim:
        raise DegenerateSpan("could not complete the basis from the standard axes")
    return completed
