"""Per-relation verification reports shared by the scenario modules."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

from ._version import __version__
from .hilbert import PHASE_CANON

Scalar = Union[float, complex]


@dataclass(frozen=True)
class Relation:
    """One verified identity: closed-form value vs directly computed value.

    For vector identities the closed form predicts an exact reconstruction,
    so ``formula_value`` is 0.0 and ``direct_value`` is the measured error
    norm. Either way ``residual == abs(formula_value - direct_value)``.
    """

    id: str
    formula_value: Scalar
    direct_value: Scalar
    residual: float


@dataclass(frozen=True)
class RelationReport:
    """Deterministic bundle of relation checks for one scenario."""

    params: Mapping[str, float]
    relations: tuple[Relation, ...]
    phase_canon: str = PHASE_CANON
    tool_version: str = __version__

    def max_residual(self) -> float:
        return max(r.residual for r in self.relations)

    def relation(self, rel_id: str) -> Relation:
        for r in self.relations:
            if r.id == rel_id:
                return r
        raise KeyError(rel_id)


def make_relation(rel_id: str, formula_value: Scalar, direct_value: Scalar) -> Relation:
    return Relation(
        id=rel_id,
        formula_value=formula_value,
        direct_value=direct_value,
        residual=abs(formula_value - direct_value),
    )


def _scalar_to_json(x: Scalar) -> Union[float, list[float]]:
    if isinstance(x, complex):
        return [x.real, x.imag]
    return float(x)


def report_to_json(report: RelationReport, timestamp: str | None = None) -> dict:
    """Serialize a report; complex scalars become [re, im] pairs.

    ``timestamp`` is injected into the metadata only when provided, keeping
    the library-level document reproducible for fixed parameters.
    """
    metadata: dict[str, str] = {
        "phase_canon": report.phase_canon,
        "tool_version": report.tool_version,
    }
    if timestamp is not None:
        metadata["timestamp"] = timestamp
    return {
        "params": dict(report.params),
        "relations": [
            {
                "id": r.id,
                "formula": _scalar_to_json(r.formula_value),
                "direct": _scalar_to_json(r.direct_value),
                "residual": r.residual,
            }
            for r in report.relations
        ],
        "phase_canon": report.phase_canon,
        "metadata": metadata,
    }
