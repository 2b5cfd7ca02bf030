"""Statistical cross-checks: sequential projections and Born-rule sampling.

Sampling uses numpy's Philox bit generator (counter-based, seedable), so
every estimate is reproducible from its recorded seed and the generator
name travels with the estimate. Counts partition the trial budget exactly,
which makes estimates from disjoint runs mergeable by summing counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, EmptyChain, EmptyTrials, IncompleteContext
from .hardy3 import ScenarioParams, build_scenario
from .hilbert import ORTH_TOL, StateVector, born_probability, complete_context, inner
from .nonlocal4 import LocalParams, build_nonlocal

RNG_NAME = "philox4x64"


def _check_complete(outcomes: Sequence[StateVector]) -> None:
    if not outcomes:
        raise IncompleteContext("a measurement context needs at least one outcome")
    dim = outcomes[0].dim
    if any(o.dim != dim for o in outcomes):
        raise IncompleteContext("outcomes mix dimensions")
    if len(outcomes) != dim:
        raise IncompleteContext(
            f"{len(outcomes)} outcomes cannot span a dimension-{dim} space"
        )
    for i, u in enumerate(outcomes):
        for v in outcomes[i + 1:]:
            if abs(inner(u, v)) >= ORTH_TOL:
                raise IncompleteContext("outcomes are not mutually orthogonal")
    m = np.array([o.components for o in outcomes])
    completeness = m.conj().T @ m  # sum of projectors
    if not np.allclose(completeness, np.eye(dim), atol=ORTH_TOL):
        raise IncompleteContext("projectors do not sum to the identity")


@dataclass(frozen=True)
class MeasurementContext:
    """A complete orthonormal basis; each vector is one outcome."""

    outcomes: tuple[StateVector, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "outcomes", tuple(self.outcomes))
        _check_complete(self.outcomes)

    @property
    def dim(self) -> int:
        return self.outcomes[0].dim


@dataclass(frozen=True)
class SampleEstimate:
    """Frequency estimate for one outcome of a sampled context."""

    estimate: float
    standard_error: float
    trials: int
    seed: int
    count: int
    rng: str = RNG_NAME

    def to_json(self) -> dict:
        return {
            "estimate": self.estimate,
            "stderr": self.standard_error,
            "trials": self.trials,
            "seed": self.seed,
            "rng": self.rng,
        }


def sequential_probability(prep: StateVector, chain: Sequence[StateVector]) -> float:
    """Probability of a chain of projective detections after preparing ``prep``.

    Returns the product |<c1|prep>|^2 * |<c2|c1>|^2 * ... over consecutive
    pairs. For rank-1 projections on pure states the conditional state
    after each detection is the detected outcome itself, so the product of
    plain Born factors is the exact sequential probability.

    Raises:
        EmptyChain: if ``chain`` is empty.
        DimensionMismatch: if any vector has a different dimension.
    """
    steps = list(chain)
    if not steps:
        raise EmptyChain("need at least one projection step")
    for v in steps:
        if v.dim != prep.dim:
            raise DimensionMismatch(f"chain vector of dimension {v.dim}, prep {prep.dim}")
    p = 1.0
    current = prep
    for outcome in steps:
        p *= abs(inner(outcome, current)) ** 2
        current = outcome
    return p


def sample_context(
    prep: StateVector, ctx: MeasurementContext, seed: int, trials: int
) -> list[SampleEstimate]:
    """Sample the context's outcome frequencies for the prepared state.

    Draws one multinomial sample of size ``trials`` from the analytic Born
    distribution, so the per-outcome counts partition ``trials`` exactly
    and the run is reproducible for a fixed seed.

    Raises:
        EmptyTrials: if ``trials`` < 1.
        IncompleteContext: if the context fails the completeness check.
    """
    if trials < 1:
        raise EmptyTrials(f"trials={trials}; need at least 1")
    _check_complete(ctx.outcomes)
    probs = np.array([born_probability(prep, o) for o in ctx.outcomes])
    probs = probs / probs.sum()  # exact simplex point for the sampler
    rng = np.random.Generator(np.random.Philox(seed))
    counts = rng.multinomial(trials, probs)
    estimates = []
    for count in counts:
        e = count / trials
        estimates.append(
            SampleEstimate(
                estimate=e,
                standard_error=math.sqrt(e * (1.0 - e) / trials),
                trials=trials,
                seed=seed,
                count=int(count),
            )
        )
    return estimates


def estimate_paradox(params: ScenarioParams, seed: int, trials: int) -> SampleEstimate:
    """Sampled frequency of the paradoxical outcome f when preparing N_f.

    Builds the dimension-3 scenario, completes f to a full context and
    returns the estimate for the f outcome. Its expectation is the
    closed-form predicted_paradox(alpha, beta).
    """
    if trials < 1:
        raise EmptyTrials(f"trials={trials}; need at least 1")
    s = build_scenario(params)
    ctx = MeasurementContext(tuple(complete_context([s.f], 3)))
    return sample_context(s.n_f, ctx, seed, trials)[0]


def estimate_nonlocal_paradox(
    params: LocalParams, seed: int, trials: int
) -> SampleEstimate:
    """Sampled frequency of the product outcome a,a when preparing N_f.

    The two-qubit analogue of ``estimate_paradox``; its expectation is
    predicted_aa_nf(a2), i.e. 1/12 at a2 = 1/2.
    """
    if trials < 1:
        raise EmptyTrials(f"trials={trials}; need at least 1")
    s = build_nonlocal(params)
    ctx = MeasurementContext(tuple(complete_context([s.kaa], 4)))
    return sample_context(s.n_f, ctx, seed, trials)[0]
