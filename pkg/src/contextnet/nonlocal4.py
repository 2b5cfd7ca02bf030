"""Two-qubit product-space scenario: one local overlap drives non-locality.

The dimension-3 scenario carries over to the product space of two
two-level systems with every outcome except one replaced by a product
state. With a single local parameter a2 = |<a|0>|^2 and

    a = sqrt(1 - a2) |1> + exp(i phase_a) sqrt(a2) |0>,    b orthogonal to a,

the correspondence to the dimension-3 labels is

    3 -> 0,0   1 -> 0,1   2 -> 1,0   D1 -> a,0   D2 -> 0,a
    S1 -> b,0  S2 -> 0,b

and both earlier magnitude parameters collapse to a2. The stand-in for f
must live in span{0,0; 0,1; 1,0} and is entangled for every interior a2;
it is named f_NL. N_f keeps its defining orthogonality to the two
"forbidden" outcomes, extended by |1,1> (the fourth direction added by the
product space). The product outcome a,a shares the orthogonality of f_NL
to b,0 and 0,b without the entangling constraint, which lets every
measured probability be traced back to the single local overlap <a|0>:

    |<f_NL|N_f>|^2 = a2^2 (1 - a2) / ((1 + a2) (1 - (1 - a2)^2))
    |<f_NL|a,a>|^2 = 1 - (1 - a2)^2
    |<a,a|N_f>|^2  = a2^2 (1 - a2) / (1 + a2)        (= 1/12 at a2 = 1/2)

Product-basis ordering is (00, 01, 10, 11) throughout.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import DimensionMismatch, require_interior
from .hilbert import StateVector, basis_vector, inner, orthogonal_complement, tensor
from .network import Realization
from .report import Relation, RelationReport, make_relation

#: Second Schmidt coefficient above this marks a state as entangled.
ENTANGLEMENT_TOL = 1e-10


@dataclass(frozen=True)
class LocalParams:
    """Single local overlap probability a2 = |<a|0>|^2 plus a phase."""

    a2: float
    phase_a: float = 0.0

    def __post_init__(self) -> None:
        require_interior(self.a2, "a2")

    def to_dict(self) -> dict[str, float]:
        return {"a2": self.a2, "phase_a": self.phase_a}

    @classmethod
    def from_dict(cls, doc: Mapping) -> "LocalParams":
        unknown = set(doc) - {"a2", "phase_a"}
        if unknown:
            raise ValueError(f"unknown parameter keys: {sorted(unknown)}")
        if "a2" not in doc:
            raise ValueError("parameters require 'a2'")
        return cls(a2=float(doc["a2"]), phase_a=float(doc.get("phase_a", 0.0)))


@dataclass(frozen=True)
class NonlocalScenario:
    """Local kets, product kets and the two derived dimension-4 outcomes."""

    params: LocalParams
    k0: StateVector
    k1: StateVector
    ka: StateVector
    kb: StateVector
    k00: StateVector
    k01: StateVector
    k10: StateVector
    k11: StateVector
    ka0: StateVector
    k0a: StateVector
    kb0: StateVector
    k0b: StateVector
    kaa: StateVector
    f_nl: StateVector
    n_f: StateVector

    @property
    def vectors(self) -> dict[str, StateVector]:
        """Outcome label -> vector, matching the Figure 3/4 node names."""
        return {
            "0,0": self.k00, "0,1": self.k01, "1,0": self.k10, "1,1": self.k11,
            "a,0": self.ka0, "0,a": self.k0a, "b,0": self.kb0, "0,b": self.k0b,
            "a,a": self.kaa, "f_NL": self.f_nl, "N_f": self.n_f,
        }

    def realization(self) -> Realization:
        return Realization(assignment=self.vectors)


def build_nonlocal(params: LocalParams) -> NonlocalScenario:
    """Construct the full two-qubit scenario from the local parameters.

    The relative phase sits on the |0> component of |a| so that
    |<a|0>|^2 equals a2 exactly; |b> and the two derived dimension-4
    outcomes inherit the canonical complement phase.
    """
    a2 = params.a2
    k0, k1 = basis_vector(2, 0), basis_vector(2, 1)
    ka = StateVector(
        [cmath.exp(1j * params.phase_a) * math.sqrt(a2), math.sqrt(1.0 - a2)]
    )
    kb = orthogonal_complement([ka], 2)

    k00, k01 = tensor(k0, k0), tensor(k0, k1)
    k10, k11 = tensor(k1, k0), tensor(k1, k1)
    ka0, k0a = tensor(ka, k0), tensor(k0, ka)
    kb0, k0b = tensor(kb, k0), tensor(k0, kb)
    kaa = tensor(ka, ka)

    f_nl = orthogonal_complement([kb0, k0b, k11], 4)
    n_f = orthogonal_complement([ka0, k0a, k11], 4)
    return NonlocalScenario(
        params, k0, k1, ka, kb,
        k00, k01, k10, k11, ka0, k0a, kb0, k0b, kaa, f_nl, n_f,
    )


def predicted_fnl_nf(a2: float) -> float:
    """Closed form for |<f_NL|N_f>|^2 in terms of the local overlap alone.

    Coincides with the dimension-3 paradox probability at alpha = beta = a2.
    """
    x = require_interior(a2, "a2")
    return (x * x / (1.0 + x)) * ((1.0 - x) / (1.0 - (1.0 - x) ** 2))


def predicted_faa(a2: float) -> float:
    """Closed form for |<f_NL|a,a>|^2: 1 - (1 - a2)^2."""
    x = require_interior(a2, "a2")
    return 1.0 - (1.0 - x) ** 2


def predicted_aa_nf(a2: float) -> float:
    """Closed form for |<a,a|N_f>|^2: a2^2 (1 - a2) / (1 + a2).

    The product of predicted_fnl_nf and predicted_faa; equals 1/12 at
    a2 = 1/2.
    """
    x = require_interior(a2, "a2")
    return x * x * (1.0 - x) / (1.0 + x)


def aa_decomposition_residual(s: NonlocalScenario) -> float:
    """Largest violation of the two identities that route a,a through f_NL.

    Checks the two-term expansion a,a = f_NL <f_NL|a,a> + 1,1 <1,1|a,a>
    (a product state written as an entangled state plus a product state)
    and the factorization <a,a|N_f> = <a,a|f_NL><f_NL|N_f>.
    """
    reconstruction = (
        s.f_nl.components * inner(s.f_nl, s.kaa)
        + s.k11.components * inner(s.k11, s.kaa)
    )
    expansion_err = float(np.linalg.norm(s.kaa.components - reconstruction))
    factorization_err = abs(
        inner(s.kaa, s.n_f) - inner(s.kaa, s.f_nl) * inner(s.f_nl, s.n_f)
    )
    return max(expansion_err, factorization_err)


def schmidt_coefficients(v: StateVector) -> tuple[float, float]:
    """Singular values (descending) of a dimension-4 vector as a 2x2 array.

    The vector is read in the fixed product ordering (00, 01, 10, 11). A
    second value above ``ENTANGLEMENT_TOL`` means the state is entangled.

    Raises:
        DimensionMismatch: if the vector is not of dimension 4.
    """
    if v.dim != 4:
        raise DimensionMismatch(f"need a dimension-4 vector, got {v.dim}")
    sv = np.linalg.svd(v.components.reshape(2, 2), compute_uv=False)
    return float(sv[0]), float(sv[1])


def is_entangled(v: StateVector, tol: float = ENTANGLEMENT_TOL) -> bool:
    return schmidt_coefficients(v)[1] > tol


def verify_all(s: NonlocalScenario) -> RelationReport:
    """Check the product-space identities against the raw vectors."""
    a2 = s.params.a2
    relations: list[Relation] = [
        make_relation("eq17", predicted_fnl_nf(a2), abs(inner(s.f_nl, s.n_f)) ** 2),
        make_relation("eq18", 0.0, aa_decomposition_residual(s)),
        make_relation("eq19", predicted_faa(a2), abs(inner(s.f_nl, s.kaa)) ** 2),
        make_relation(
            "eq20",
            inner(s.kaa, s.f_nl) * inner(s.f_nl, s.n_f),
            inner(s.kaa, s.n_f),
        ),
        make_relation("eq21", predicted_aa_nf(a2), abs(inner(s.kaa, s.n_f)) ** 2),
    ]
    return RelationReport(params=s.params.to_dict(), relations=tuple(relations))
