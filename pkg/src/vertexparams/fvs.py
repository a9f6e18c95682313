from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from .budget import Deadline, ensure_deadline
from .graph import Graph, is_forest, to_multigraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FvsResult:
    fvs: Tuple[int, ...]
    size: int
    forest_check: bool

    def to_dict(self) -> Dict[str, object]:
        return {"fvs": list(self.fvs), "size": self.size, "forest_check": self.forest_check}


def _looped(mg: nx.MultiGraph) -> List[int]:
    return sorted({u for u, _ in nx.selfloop_edges(mg)})


def _smooth(mg: nx.MultiGraph) -> bool:
    """Replace each loop-free degree-2 vertex by an edge between its two neighbours."""
    changed = False
    for v in sorted(mg.nodes):
        if mg.degree(v) != 2 or mg.has_edge(v, v):
            continue
        (_, a), (_, b) = mg.edges(v)
        mg.remove_node(v)
        mg.add_edge(a, b)
        changed = True
    return changed


def reduce_instance(mg: nx.MultiGraph, forced: Iterable[int] = ()) -> Tuple[nx.MultiGraph, FrozenSet[int]]:
    """Apply the degree rules to a fixpoint; returns the reduced copy and the vertices it forced.

    Rules: a looped vertex is forced into the solution; a vertex of degree <= 1 is
    deleted; a loop-free vertex of degree 2 is smoothed into an edge between its
    neighbours (which may create a parallel edge or a loop).
    """
    reduced = mg.copy()
    already = set(forced)
    added = set()
    while True:
        looped = _looped(reduced)
        if looped:
            added.update(v for v in looped if v not in already)
            reduced.remove_nodes_from(looped)
            continue
        to_remove = [v for v in reduced.nodes if reduced.degree(v) <= 1]
        if to_remove:
            reduced.remove_nodes_from(to_remove)
            continue
        if not _smooth(reduced):
            break
    return reduced, frozenset(added)


def shortest_cycle(mg: nx.MultiGraph) -> Optional[List[int]]:
    """Vertices of a shortest cycle (loops, then parallel edges, then the girth)."""
    looped = _looped(mg)
    if looped:
        return [looped[0]]
    doubled = sorted({tuple(sorted((u, v))) for u, v in mg.edges() if mg.number_of_edges(u, v) > 1})
    if doubled:
        return list(doubled[0])
    # a shortest cycle through edge uv is uv plus a shortest u-v path avoiding it
    simple = nx.Graph(mg)
    best: Optional[List[int]] = None
    for u, v in sorted(tuple(sorted(edge)) for edge in simple.edges()):
        simple.remove_edge(u, v)
        try:
            path = nx.bidirectional_shortest_path(simple, u, v)
        except nx.NetworkXNoPath:
            path = None
        simple.add_edge(u, v)
        if path is None:
            continue
        cycle = sorted(path)
        if best is None or (len(cycle), cycle) < (len(best), best):
            best = cycle
            if len(best) == 3:
                break
    return best


def _branch(mg: nx.MultiGraph, budget: int, deadline: Deadline) -> Optional[List[int]]:
    deadline.check()
    reduced, forced = reduce_instance(mg)
    budget -= len(forced)
    if budget < 0:
        return None
    if reduced.number_of_nodes() == 0:
        return sorted(forced)
    if budget == 0:
        return None
    cycle = shortest_cycle(reduced)
    if cycle is None:
        return sorted(forced)
    for v in cycle:
        child = reduced.copy()
        child.remove_node(v)
        found = _branch(child, budget - 1, deadline)
        if found is not None:
            return sorted(forced | {v} | set(found))
    return None


def min_fvs(g: Graph, deadline: Optional[Deadline] = None) -> FvsResult:
    """Minimum feedback vertex set by iterative deepening over the solution size."""
    deadline = ensure_deadline(deadline)
    root = to_multigraph(g)
    k = 0
    while True:
        found = _branch(root, k, deadline)
        if found is not None:
            fvs = tuple(sorted(found))
            check = is_forest(g, (v for v in g.vertices if v not in set(fvs)))
            logger.debug("min_fvs on %s: size %d after deepening to k=%d", g.label, len(fvs), k)
            return FvsResult(fvs=fvs, size=len(fvs), forest_check=check)
        k += 1
