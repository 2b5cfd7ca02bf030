"""Orthogonality networks of measurement outcomes.

A network is a labeled graph: nodes are measurement outcomes, edges assert
that two outcomes are orthogonal (and can therefore share a measurement
context), and ``required_non_edges`` assert a strictly non-zero overlap.
Pairs in neither set are unconstrained: at special parameter values a
non-adjacent pair may become accidentally orthogonal without breaking the
scenario.

Four diagrams are built in:

* Figure 1: one three-outcome context {1, 2, 3} plus two outside outcomes
  D1 (orthogonal to 1 only) and D2 (orthogonal to 2 only).
* Figure 2: Figure 1 extended by S1, S2 (completing the contexts
  {1, D1, S1} and {2, D2, S2}) and by an outcome f orthogonal to S1 and S2.
* Figure 3: the same graph as Figure 2 realized in the product space of two
  two-level systems, with outcomes relabeled to product states:
  1 -> 0,1   2 -> 1,0   3 -> 0,0   D1 -> a,0   D2 -> 0,a
  S1 -> b,0  S2 -> 0,b  f -> f_NL.
* Figure 4: Figure 3 plus the product outcomes 1,1 and a,a. Each added
  edge is forced by factorizing the overlap of product states
  (with <a|b> = 0 and <0|1> = 0):

    (1,1)-(0,0), (1,1)-(0,1), (1,1)-(1,0):  a factor <1|0> = 0
    (1,1)-(a,0), (1,1)-(0,a):               the factor <1|0> = 0 on the
                                            second resp. first system
    (1,1)-(b,0), (1,1)-(0,b):               again a factor <1|0> = 0
    (1,1)-(f_NL):                           f_NL lives in the span of
                                            {0,0; 0,1; 1,0} by definition
    (a,a)-(b,0), (a,a)-(0,b):               a factor <a|b> = 0

  (a,a)-(a,0) is deliberately absent: <a,a|a,0> = <a|0> != 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Union

from .errors import DimensionMismatch, MissingAssignment
from .hilbert import ORTH_TOL, StateVector, inner


class Figure(Enum):
    """The built-in orthogonality diagrams."""

    FIG1 = 1
    FIG2 = 2
    FIG3 = 3
    FIG4 = 4


Pair = tuple[str, str]


def _pair(a: str, b: str) -> Pair:
    if a == b:
        raise ValueError(f"self-loop on node {a!r}")
    return (a, b) if a < b else (b, a)


def _pairs(raw) -> frozenset[Pair]:
    return frozenset(_pair(a, b) for a, b in raw)


@dataclass(frozen=True)
class ContextNetwork:
    """Labeled orthogonality graph with mandatory non-orthogonality pairs."""

    nodes: tuple[str, ...]
    edges: frozenset[Pair]
    required_non_edges: frozenset[Pair] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if len(set(self.nodes)) != len(self.nodes):
            raise ValueError("duplicate node labels")
        object.__setattr__(self, "edges", _pairs(self.edges))
        object.__setattr__(self, "required_non_edges", _pairs(self.required_non_edges))
        known = set(self.nodes)
        for a, b in self.edges | self.required_non_edges:
            if a not in known or b not in known:
                raise ValueError(f"pair ({a!r}, {b!r}) references an unknown node")
        overlap = self.edges & self.required_non_edges
        if overlap:
            raise ValueError(f"pairs marked both orthogonal and non-orthogonal: {sorted(overlap)}")

    def degree(self, node: str) -> int:
        return sum(1 for e in self.edges if node in e)


@dataclass(frozen=True)
class Realization:
    """Assignment of one concrete vector to every outcome label."""

    assignment: Mapping[str, StateVector]


@dataclass(frozen=True)
class Violation:
    """One broken constraint, with the measured overlap for diagnostics."""

    kind: str  # "edge" (should be orthogonal) or "non_edge" (should not be)
    pair: Pair
    overlap: float


_FIG2_NODES = ("1", "2", "3", "D1", "D2", "S1", "S2", "f")
_FIG2_EDGES = (
    ("1", "2"), ("1", "3"), ("2", "3"),
    ("1", "D1"), ("1", "S1"), ("D1", "S1"),
    ("2", "D2"), ("2", "S2"), ("D2", "S2"),
    ("f", "S1"), ("f", "S2"),
)
# Only pairs whose non-orthogonality the scenario guarantees for every
# interior parameter choice.
_FIG2_NON_EDGES = (
    ("D1", "D2"), ("D1", "2"), ("D1", "3"), ("D2", "1"), ("D2", "3"),
    ("S1", "S2"), ("f", "3"), ("f", "D1"), ("f", "D2"),
)

_FIG3_RELABEL = {
    "1": "0,1", "2": "1,0", "3": "0,0",
    "D1": "a,0", "D2": "0,a", "S1": "b,0", "S2": "0,b", "f": "f_NL",
}


def _fig1() -> ContextNetwork:
    return ContextNetwork(
        nodes=("1", "2", "3", "D1", "D2"),
        edges=_pairs((("1", "2"), ("1", "3"), ("2", "3"), ("1", "D1"), ("2", "D2"))),
        required_non_edges=_pairs(
            (("D1", "D2"), ("D1", "2"), ("D1", "3"), ("D2", "1"), ("D2", "3"))
        ),
    )


def _fig2() -> ContextNetwork:
    return ContextNetwork(
        nodes=_FIG2_NODES,
        edges=_pairs(_FIG2_EDGES),
        required_non_edges=_pairs(_FIG2_NON_EDGES),
    )


def _fig3() -> ContextNetwork:
    r = _FIG3_RELABEL
    return ContextNetwork(
        nodes=tuple(r[n] for n in _FIG2_NODES),
        edges=_pairs(tuple((r[a], r[b]) for a, b in _FIG2_EDGES)),
        required_non_edges=_pairs(tuple((r[a], r[b]) for a, b in _FIG2_NON_EDGES)),
    )


def _fig4() -> ContextNetwork:
    base = _fig3()
    added_edges = (
        ("1,1", "0,0"), ("1,1", "0,1"), ("1,1", "1,0"),
        ("1,1", "a,0"), ("1,1", "0,a"), ("1,1", "b,0"), ("1,1", "0,b"),
        ("1,1", "f_NL"),
        ("a,a", "b,0"), ("a,a", "0,b"),
    )
    added_non_edges = (("1,1", "a,a"), ("f_NL", "a,a"))
    return ContextNetwork(
        nodes=base.nodes + ("1,1", "a,a"),
        edges=base.edges | _pairs(added_edges),
        required_non_edges=base.required_non_edges | _pairs(added_non_edges),
    )


_BUILDERS = {Figure.FIG1: _fig1, Figure.FIG2: _fig2, Figure.FIG3: _fig3, Figure.FIG4: _fig4}


def builtin_network(figure: Union[Figure, int]) -> ContextNetwork:
    """Return the orthogonality network of one of the built-in diagrams."""
    fig = Figure(figure) if not isinstance(figure, Figure) else figure
    return _BUILDERS[fig]()


def validate_realization(
    net: ContextNetwork,
    realization: Union[Realization, Mapping[str, StateVector]],
    tol: float = ORTH_TOL,
) -> list[Violation]:
    """Check a concrete vector assignment against a network's constraints.

    Returns one Violation per edge whose overlap magnitude is >= tol and
    per required non-edge whose overlap magnitude is < tol; an empty list
    means the assignment realizes the network faithfully. Labels present in
    the assignment but absent from the network are ignored.

    Raises:
        MissingAssignment: if some network node has no vector.
        DimensionMismatch: if the assigned vectors do not share a dimension.
    """
    assignment = realization.assignment if isinstance(realization, Realization) else realization
    missing = [n for n in net.nodes if n not in assignment]
    if missing:
        raise MissingAssignment(f"no vector assigned to node(s): {missing}")
    dims = {assignment[n].dim for n in net.nodes}
    if len(dims) > 1:
        raise DimensionMismatch(f"assignment mixes dimensions {sorted(dims)}")

    violations: list[Violation] = []
    for a, b in sorted(net.edges):
        overlap = abs(inner(assignment[a], assignment[b]))
        if overlap >= tol:
            violations.append(Violation("edge", (a, b), overlap))
    for a, b in sorted(net.required_non_edges):
        overlap = abs(inner(assignment[a], assignment[b]))
        if overlap < tol:
            violations.append(Violation("non_edge", (a, b), overlap))
    return violations


def network_to_json(net: ContextNetwork) -> dict:
    """Serialize a network to the plain-JSON document schema."""
    return {
        "nodes": list(net.nodes),
        "edges": [list(p) for p in sorted(net.edges)],
        "non_edges": [list(p) for p in sorted(net.required_non_edges)],
    }


def network_from_json(doc: Mapping) -> ContextNetwork:
    """Rebuild a network from its JSON document."""
    return ContextNetwork(
        nodes=tuple(doc["nodes"]),
        edges=_pairs(doc["edges"]),
        required_non_edges=_pairs(doc.get("non_edges", ())),
    )
