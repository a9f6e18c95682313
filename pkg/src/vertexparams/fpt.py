"""FPT(ν) solvers that branch over subsets of a minimum feedback vertex set F*.

G - F* is a forest, so each branch finishes with a polynomial forest computation.
Since τ >= ν the same algorithms are FPT(τ).
"""
from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .budget import Deadline, ensure_deadline
from .errors import ContractViolation
from .fvs import min_fvs
from .graph import Graph, decompose_forest
from .kinds import ParameterKind
from .solution import VertexSetSolution, certify

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FstarSplit:
    fstar: Tuple[int, ...]
    forest: Tuple[int, ...]

    @classmethod
    def of(cls, g: Graph, deadline: Deadline, fstar: Optional[Sequence[int]] = None) -> "FstarSplit":
        chosen = tuple(sorted(min_fvs(g, deadline).fvs if fstar is None else fstar))
        blocked = set(chosen)
        forest = tuple(v for v in g.vertices if v not in blocked)
        logger.debug("F* of %s has %d vertices: %s", g.label, len(chosen), chosen)
        return cls(fstar=chosen, forest=forest)


def _subsets(items: Sequence[int]):
    for size in range(len(items) + 1):
        yield from combinations(items, size)


def _is_clique(g: Graph, vertices: Sequence[int]) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(vertices, 2))


def _is_independent(g: Graph, vertices: Sequence[int]) -> bool:
    return not any(g.has_edge(u, v) for u, v in combinations(vertices, 2))


def clique_fpt_nu(
    g: Graph, deadline: Optional[Deadline] = None, fstar: Optional[Sequence[int]] = None
) -> VertexSetSolution:
    """A clique has at most two forest vertices: extend each clique C of F* by an edge, a vertex, or nothing."""
    deadline = ensure_deadline(deadline)
    split = FstarSplit.of(g, deadline, fstar)
    forest_set = set(split.forest)
    best: Tuple[int, ...] = ()
    for clique in _subsets(split.fstar):
        deadline.check()
        if not _is_clique(g, clique):
            continue
        common = [v for v in split.forest if all(g.has_edge(v, c) for c in clique)]
        extension: Tuple[int, ...] = ()
        common_set = set(common)
        for v in common:
            partner = next((w for w in sorted(g.adjacency[v]) if w > v and w in common_set), None)
            if partner is not None:
                extension = (v, partner)
                break
        if not extension and common:
            extension = (common[0],)
        candidate = tuple(sorted(clique + extension))
        if len(candidate) > len(best):
            best = candidate
    assert all(v in forest_set for v in set(best) - set(split.fstar))
    return certify(g, ParameterKind.MAX_CLIQUE, best, {"fvs": list(split.fstar)})


def forest_max_independent_set(g: Graph, vertices: Sequence[int]) -> List[int]:
    """Exact maximum independent set of the forest G[vertices] by leaf-first greedy."""
    alive = set(vertices)
    degree = {v: len(g.adjacency[v] & alive) for v in alive}
    heap = [v for v, d in degree.items() if d <= 1]
    heapq.heapify(heap)
    chosen: List[int] = []
    while alive:
        if not heap:
            raise ContractViolation("leaf-first greedy ran on a graph that is not a forest")
        v = heapq.heappop(heap)
        if v not in alive or degree[v] > 1:
            continue
        chosen.append(v)
        dropped = [v] + [w for w in g.adjacency[v] if w in alive]
        for w in dropped:
            alive.discard(w)
        for w in dropped:
            for x in g.adjacency[w]:
                if x in alive:
                    degree[x] -= 1
                    if degree[x] <= 1:
                        heapq.heappush(heap, x)
    return sorted(chosen)


def independent_set_fpt_nu(
    g: Graph, deadline: Optional[Deadline] = None, fstar: Optional[Sequence[int]] = None
) -> VertexSetSolution:
    deadline = ensure_deadline(deadline)
    split = FstarSplit.of(g, deadline, fstar)
    best: Optional[List[int]] = None
    for chosen in _subsets(split.fstar):
        deadline.check()
        if not _is_independent(g, chosen):
            continue
        blocked: Set[int] = set()
        for v in chosen:
            blocked |= g.adjacency[v]
        rest = [v for v in split.forest if v not in blocked]
        candidate = sorted(list(chosen) + forest_max_independent_set(g, rest))
        if best is None or len(candidate) > len(best):
            best = candidate
    return certify(g, ParameterKind.MAX_INDEPENDENT_SET, best or (), {"fvs": list(split.fstar)})


def vertex_cover_fpt_nu(
    g: Graph, deadline: Optional[Deadline] = None, fstar: Optional[Sequence[int]] = None
) -> VertexSetSolution:
    """Minimum vertex cover as the complement of the FPT(ν) maximum independent set (α = n - τ)."""
    independent = independent_set_fpt_nu(g, deadline, fstar)
    inside = independent.witness_set
    return certify(
        g,
        ParameterKind.MIN_VERTEX_COVER,
        (v for v in g.vertices if v not in inside),
        independent.details,
    )


def _fstar_colorings(g: Graph, fstar: Sequence[int], k: int, deadline: Deadline):
    """Every proper k-colouring of G[F*] up to renaming colours (first-use canonical order)."""
    colors: Dict[int, int] = {}

    def extend(index: int, used: int):
        deadline.check()
        if index == len(fstar):
            yield dict(colors)
            return
        v = fstar[index]
        blocked = {colors[u] for u in g.adjacency[v] if u in colors}
        for color in range(min(k, used + 1)):
            if color in blocked:
                continue
            colors[v] = color
            yield from extend(index + 1, max(used, color + 1))
            del colors[v]

    yield from extend(0, 0)


def _list_color_forest(
    g: Graph, forest: Sequence[int], fixed: Dict[int, int], k: int
) -> Optional[Dict[int, int]]:
    """List-colour the forest where L(v) avoids the colours of v's neighbours in F*."""
    plan = decompose_forest(g, forest)
    lists = {
        v: [c for c in range(k) if c not in {fixed[u] for u in g.adjacency[v] if u in fixed}]
        for v in forest
    }
    assignment: Dict[int, int] = {}
    for tree in plan.trees:
        feasible: Dict[int, List[int]] = {}
        # tree.vertices is a pre-order, so reversed it visits children before parents
        for v in reversed(tree.vertices):
            kids = tree.children[v]
            feasible[v] = [
                c for c in lists[v]
                if all(any(x != c for x in feasible[child]) for child in kids)
            ]
        if not feasible[tree.root]:
            return None
        assignment[tree.root] = feasible[tree.root][0]
        for v in tree.vertices:
            for child in tree.children[v]:
                assignment[child] = next(c for c in feasible[child] if c != assignment[v])
    return assignment


def chromatic_fpt_nu(
    g: Graph, deadline: Optional[Deadline] = None, fstar: Optional[Sequence[int]] = None
) -> VertexSetSolution:
    """Least k such that some k-colouring of F* extends to the forest; k <= ν + 2 always suffices."""
    deadline = ensure_deadline(deadline)
    split = FstarSplit.of(g, deadline, fstar)
    if g.n == 0:
        return certify(g, ParameterKind.CHROMATIC_NUMBER, (), {"fvs": [], "chi_fstar": 0})
    chi_fstar: Optional[int] = None if split.fstar else 0
    for k in range(1, len(split.fstar) + 3):
        for coloring in _fstar_colorings(g, split.fstar, k, deadline):
            if chi_fstar is None:
                chi_fstar = k
            extension = _list_color_forest(g, split.forest, coloring, k)
            if extension is None:
                continue
            extension.update(coloring)
            witness = tuple(extension[v] for v in g.vertices)
            logger.debug("chromatic_fpt_nu on %s: k=%d, chi(F*)=%s", g.label, k, chi_fstar)
            return certify(
                g,
                ParameterKind.CHROMATIC_NUMBER,
                witness,
                {"fvs": list(split.fstar), "chi_fstar": chi_fstar, "k": k},
            )
    raise ContractViolation("no colouring found with nu + 2 colours; F* is not a feedback vertex set")
