from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Tuple

import networkx as nx

from .graph import Graph, to_networkx
from .kinds import ParameterKind


@dataclass(frozen=True)
class VertexSetSolution:
    """An optimum value with its witness: a sorted vertex tuple, or one colour per vertex for χ."""

    kind: ParameterKind
    value: int
    witness: Tuple[int, ...]
    certified: bool = False
    details: Mapping[str, object] = field(default_factory=dict, compare=False)

    @property
    def witness_set(self) -> frozenset:
        return frozenset(self.witness)

    def to_dict(self) -> Dict[str, object]:
        return {
            "parameter": self.kind.short,
            "value": self.value,
            "witness": list(self.witness),
            "certified": self.certified,
        }


def _is_independent(g: Graph, chosen: frozenset) -> bool:
    return all(not (g.adjacency[v] & chosen) for v in chosen)


def _dominates(g: Graph, chosen: frozenset) -> bool:
    covered = set(chosen)
    for v in chosen:
        covered |= g.adjacency[v]
    return len(covered) == g.n


def is_feasible(g: Graph, kind: ParameterKind, witness: Iterable[int]) -> bool:
    """Feasibility of a witness for its kind; never compares against the optimum."""
    witness = tuple(witness)
    if kind is ParameterKind.CHROMATIC_NUMBER:
        if len(witness) != g.n:
            return False
        return all(witness[u] != witness[v] for u, v in g.edges)
    if any(not 0 <= v < g.n for v in witness) or len(set(witness)) != len(witness):
        return False
    chosen = frozenset(witness)
    if kind is ParameterKind.MAX_INDEPENDENT_SET:
        return _is_independent(g, chosen)
    if kind is ParameterKind.MIN_VERTEX_COVER:
        return all(u in chosen or v in chosen for u, v in g.edges)
    if kind is ParameterKind.MAX_CLIQUE:
        return all(chosen - {v} <= g.adjacency[v] for v in chosen)
    if kind is ParameterKind.MIN_DOMINATING_SET:
        return _dominates(g, chosen)
    if kind is ParameterKind.MIN_INDEPENDENT_DOMINATING_SET:
        return _is_independent(g, chosen) and _dominates(g, chosen)
    if kind is ParameterKind.MIN_FEEDBACK_VERTEX_SET:
        remaining = to_networkx(g)
        remaining.remove_nodes_from(chosen)
        return nx.is_forest(remaining) if remaining.number_of_nodes() else True
    raise ValueError(f"Unsupported parameter kind: {kind}")


def witness_size(kind: ParameterKind, witness: Tuple[int, ...]) -> int:
    if kind is ParameterKind.CHROMATIC_NUMBER:
        return len(set(witness))
    return len(witness)


def verify_witness(g: Graph, sol: VertexSetSolution) -> bool:
    try:
        return is_feasible(g, sol.kind, sol.witness) and witness_size(sol.kind, sol.witness) == sol.value
    except (TypeError, IndexError):
        return False


def certify(
    g: Graph,
    kind: ParameterKind,
    witness: Iterable[int],
    details: Mapping[str, object] | None = None,
) -> VertexSetSolution:
    """Package a witness as a solution whose value is its size, certified by verify_witness."""
    if kind is ParameterKind.CHROMATIC_NUMBER:
        ordered = tuple(int(c) for c in witness)
    else:
        ordered = tuple(sorted(int(v) for v in witness))
    draft = VertexSetSolution(kind=kind, value=witness_size(kind, ordered), witness=ordered,
                              details=dict(details or {}))
    return VertexSetSolution(
        kind=kind,
        value=draft.value,
        witness=ordered,
        certified=verify_witness(g, draft),
        details=draft.details,
    )
