"""Three-dimensional cyclic context scenario and its closed-form overlaps.

The scenario lives in dimension 3. The central context is the standard
basis {|1>, |2>, |3>}. Two outside outcomes are fixed by two probability
parameters and two phases:

    D1 = sqrt(1 - alpha) |2> + exp(i phase_d1) sqrt(alpha) |3>
    D2 = sqrt(1 - beta)  |1> + exp(i phase_d2) sqrt(beta)  |3>

so alpha = |<D1|3>|^2 and beta = |<D2|3>|^2. Everything else is derived
purely from orthogonality, never from the closed-form coefficient
relations under test (that separation is what makes the vectors an
independent oracle for the formulas):

    S1  completes the context {1, D1, S1}
    S2  completes the context {2, D2, S2}
    f   is orthogonal to S1 and S2
    N_f is orthogonal to D1 and D2

Although f and N_f would have to be mutually exclusive outcomes under
context-independent assignment of values, their overlap |<f|N_f>|^2 is
strictly positive for every interior parameter choice; ``predicted_paradox``
gives its closed form, maximal at 1/9 for alpha = beta = 1/2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import require_interior
from .hilbert import StateVector, basis_vector, inner, orthogonal_complement
from .network import Realization
from .report import Relation, RelationReport, make_relation


@dataclass(frozen=True)
class ScenarioParams:
    """Free data of the scenario: two overlap probabilities and two phases.

    alpha and beta must lie strictly inside (0, 1); at the boundary the
    required non-orthogonalities fail and closed-form denominators vanish.
    """

    alpha: float
    beta: float
    phase_d1: float = 0.0
    phase_d2: float = 0.0

    def __post_init__(self) -> None:
        require_interior(self.alpha, "alpha")
        require_interior(self.beta, "beta")

    def to_dict(self) -> dict[str, float]:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "phase_d1": self.phase_d1,
            "phase_d2": self.phase_d2,
        }

    @classmethod
    def from_dict(cls, doc: Mapping) -> "ScenarioParams":
        unknown = set(doc) - {"alpha", "beta", "phase_d1", "phase_d2"}
        if unknown:
            raise ValueError(f"unknown parameter keys: {sorted(unknown)}")
        if "alpha" not in doc or "beta" not in doc:
            raise ValueError("parameters require both 'alpha' and 'beta'")
        return cls(
            alpha=float(doc["alpha"]),
            beta=float(doc["beta"]),
            phase_d1=float(doc.get("phase_d1", 0.0)),
            phase_d2=float(doc.get("phase_d2", 0.0)),
        )


@dataclass(frozen=True)
class HardyScenario:
    """The nine concrete outcome vectors of the dimension-3 scenario."""

    params: ScenarioParams
    k1: StateVector
    k2: StateVector
    k3: StateVector
    d1: StateVector
    d2: StateVector
    s1: StateVector
    s2: StateVector
    f: StateVector
    n_f: StateVector

    @property
    def vectors(self) -> dict[str, StateVector]:
        """Outcome label -> vector, matching the Figure 2 node names."""
        return {
            "1": self.k1, "2": self.k2, "3": self.k3,
            "D1": self.d1, "D2": self.d2,
            "S1": self.s1, "S2": self.s2,
            "f": self.f, "N_f": self.n_f,
        }

    def realization(self) -> Realization:
        return Realization(assignment=self.vectors)


def build_scenario(params: ScenarioParams) -> HardyScenario:
    """Construct all nine vectors from the scenario parameters.

    D1 and D2 are written down directly; S1, S2, f and N_f come from
    orthogonal complements with the canonical phase, so the construction is
    deterministic and independent of the predicted_* closed forms.
    """
    a, b = params.alpha, params.beta
    k1, k2, k3 = (basis_vector(3, i) for i in range(3))
    d1 = StateVector(
        [0.0, math.sqrt(1.0 - a), cmath.exp(1j * params.phase_d1) * math.sqrt(a)]
    )
    d2 = StateVector(
        [math.sqrt(1.0 - b), 0.0, cmath.exp(1j * params.phase_d2) * math.sqrt(b)]
    )
    s1 = orthogonal_complement([k1, d1], 3)
    s2 = orthogonal_complement([k2, d2], 3)
    f = orthogonal_complement([s1, s2], 3)
    n_f = orthogonal_complement([d1, d2], 3)
    return HardyScenario(params, k1, k2, k3, d1, d2, s1, s2, f, n_f)


def chain_rule_residual(s: HardyScenario) -> float:
    """|<D1|D2> - <D1|3><3|D2>|: the overlap factorizes through |3>."""
    direct = inner(s.d1, s.d2)
    via_center = inner(s.d1, s.k3) * inner(s.k3, s.d2)
    return abs(direct - via_center)


def f_expansion_residual(s: HardyScenario) -> float:
    """Norm of f minus its expansion over D1, D2 and |3>.

    The expansion f = D1 <D1|f> + D2 <D2|f> - |3> <3|f> mixes outcomes from
    three different contexts; the minus sign on the |3> term is what breaks
    the either/or reading of the two two-term expansions of f.
    """
    reconstruction = (
        s.d1.components * inner(s.d1, s.f)
        + s.d2.components * inner(s.d2, s.f)
        - s.k3.components * inner(s.k3, s.f)
    )
    return float(np.linalg.norm(s.f.components - reconstruction))


def nf_relation_residual(s: HardyScenario) -> float:
    """Largest violation of the three complex relations tying N_f to |3>.

    Checks <f|N_f> = -<f|3><3|N_f> and the two coefficient relations
    <D2|1><1|N_f> = -<D2|3><3|N_f>, <D1|2><2|N_f> = -<D1|3><3|N_f>.
    """
    r_f = abs(inner(s.f, s.n_f) + inner(s.f, s.k3) * inner(s.k3, s.n_f))
    r_1 = abs(
        inner(s.d2, s.k1) * inner(s.k1, s.n_f)
        + inner(s.d2, s.k3) * inner(s.k3, s.n_f)
    )
    r_2 = abs(
        inner(s.d1, s.k2) * inner(s.k2, s.n_f)
        + inner(s.d1, s.k3) * inner(s.k3, s.n_f)
    )
    return max(r_f, r_1, r_2)


def predicted_nf3(alpha: float, beta: float) -> float:
    """Closed form for |<3|N_f>|^2: (1-a)(1-b) / (1-ab).

    Strictly positive for interior parameters, so N_f can never join the
    central context.
    """
    a = require_interior(alpha, "alpha")
    b = require_interior(beta, "beta")
    return (1.0 - a) * (1.0 - b) / (1.0 - a * b)


def predicted_f3(alpha: float, beta: float) -> float:
    """Closed form for |<f|3>|^2: ab / (1 - (1-a)(1-b))."""
    a = require_interior(alpha, "alpha")
    b = require_interior(beta, "beta")
    return a * b / (1.0 - (1.0 - a) * (1.0 - b))


def predicted_paradox(alpha: float, beta: float) -> float:
    """Closed form for |<f|N_f>|^2, the paradoxical overlap.

    Equals predicted_nf3 * predicted_f3 and depends only on the two
    magnitudes, never on the phases. Maximal value 1/9 at (1/2, 1/2).
    """
    a = require_interior(alpha, "alpha")
    b = require_interior(beta, "beta")
    return (a * b / (1.0 - a * b)) * (
        (1.0 - a) * (1.0 - b) / (1.0 - (1.0 - a) * (1.0 - b))
    )


def verify_all(s: HardyScenario) -> RelationReport:
    """Check every identity of the scenario against the raw vectors.

    Complex identities are compared as complex numbers (strictly stronger
    than their squared-magnitude consequences); squared-magnitude closed
    forms are compared against directly computed Born weights. The report
    is deterministic for fixed parameters.
    """
    a, b = s.params.alpha, s.params.beta
    nf3 = predicted_nf3(a, b)

    i_d1_3 = inner(s.d1, s.k3)
    i_3_d2 = inner(s.k3, s.d2)
    i_f_3 = inner(s.f, s.k3)
    i_3_nf = inner(s.k3, s.n_f)
    i_f_d1 = inner(s.f, s.d1)
    i_f_d2 = inner(s.f, s.d2)

    relations: list[Relation] = [
        make_relation("eq3", i_d1_3 * i_3_d2, inner(s.d1, s.d2)),
        make_relation("eq6", 0.0, f_expansion_residual(s)),
        make_relation("eq9", -i_f_3 * i_3_nf, inner(s.f, s.n_f)),
        make_relation(
            "eq10a",
            -inner(s.d2, s.k3) * i_3_nf,
            inner(s.d2, s.k1) * inner(s.k1, s.n_f),
        ),
        make_relation(
            "eq10b",
            -i_d1_3 * i_3_nf,
            inner(s.d1, s.k2) * inner(s.k2, s.n_f),
        ),
        make_relation("eq11a", (b / (1.0 - b)) * nf3, abs(inner(s.k1, s.n_f)) ** 2),
        make_relation("eq11b", (a / (1.0 - a)) * nf3, abs(inner(s.k2, s.n_f)) ** 2),
        make_relation("eq12", nf3, abs(i_3_nf) ** 2),
        make_relation("eq13a", i_f_d1 * i_d1_3, i_f_3),
        make_relation("eq13b", i_f_d2 * inner(s.d2, s.k3), i_f_3),
        make_relation(
            "eq14",
            1.0,
            abs(i_f_d1) ** 2 + abs(i_f_d2) ** 2 - abs(i_f_3) ** 2,
        ),
        make_relation("eq15", predicted_f3(a, b), abs(i_f_3) ** 2),
        make_relation("eq16", predicted_paradox(a, b), abs(inner(s.f, s.n_f)) ** 2),
    ]
    return RelationReport(params=s.params.to_dict(), relations=tuple(relations))
