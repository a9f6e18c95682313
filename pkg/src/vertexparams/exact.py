"""Ground-truth solvers for the seven parameters by exhaustive search.

These never call the FPT solvers; they are the oracle the FPT solvers and the
reductions are checked against. Ties go to the lexicographically smallest witness.
"""
from __future__ import annotations

import logging
from itertools import combinations
from typing import Callable, Iterable, List, Optional, Tuple

import networkx as nx

from .budget import Deadline, ensure_deadline
from .errors import SizeLimitError
from .graph import Graph, complement, to_networkx
from .kinds import ParameterKind
from .solution import VertexSetSolution, certify

logger = logging.getLogger(__name__)

DEFAULT_BRUTE_FORCE_CEILING = 22


def _check_ceiling(g: Graph, ceiling: Optional[int], what: str) -> None:
    limit = DEFAULT_BRUTE_FORCE_CEILING if ceiling is None else ceiling
    if g.n > limit:
        raise SizeLimitError(f"{what} on {g.n} vertices exceeds the brute-force ceiling of {limit}.")


def _bits(mask: int) -> Tuple[int, ...]:
    out: List[int] = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _max_independent_mask(g: Graph, include_first: bool, deadline: Deadline) -> int:
    """Branch and bound over vertices in ascending order.

    include_first yields the lexicographically smallest maximum set; exclude-first
    yields the one whose complement is lexicographically smallest.
    """
    masks = g.masks
    best = [-1, 0]

    def search(cand: int, chosen: int, size: int) -> None:
        deadline.check()
        if size + cand.bit_count() <= best[0]:
            return
        if not cand:
            best[0], best[1] = size, chosen
            return
        low = cand & -cand
        v = low.bit_length() - 1
        rest = cand ^ low
        include = (rest & ~masks[v], chosen | low, size + 1)
        exclude = (rest, chosen, size)
        for branch in ((include, exclude) if include_first else (exclude, include)):
            search(*branch)

    search((1 << g.n) - 1, 0, 0)
    return best[1]


def _max_induced_forest_mask(g: Graph, include_first: bool, deadline: Deadline) -> int:
    masks = g.masks
    best = [-1, 0]

    def search(cand: int, chosen: int, size: int, components: Tuple[int, ...]) -> None:
        deadline.check()
        if size + cand.bit_count() <= best[0]:
            return
        if not cand:
            best[0], best[1] = size, chosen
            return
        low = cand & -cand
        v = low.bit_length() - 1
        rest = cand ^ low
        branches = []
        touched = [comp for comp in components if masks[v] & comp]
        if all((masks[v] & comp).bit_count() == 1 for comp in touched):
            merged = low
            for comp in touched:
                merged |= comp
            kept = tuple(comp for comp in components if not masks[v] & comp) + (merged,)
            branches.append((rest, chosen | low, size + 1, kept))
        exclude = (rest, chosen, size, components)
        if include_first:
            branches.append(exclude)
        else:
            branches.insert(0, exclude)
        for branch in branches:
            search(*branch)

    search((1 << g.n) - 1, 0, 0, ())
    return best[1]


def _first_subset(
    n: int,
    accept: Callable[[Tuple[int, ...]], bool],
    deadline: Deadline,
    pool: Optional[Iterable[int]] = None,
    prefix: Tuple[int, ...] = (),
) -> Tuple[int, ...]:
    """Smallest, then lexicographically first, subset of pool accepted (together with prefix)."""
    candidates = tuple(range(n)) if pool is None else tuple(sorted(pool))
    for size in range(len(candidates) + 1):
        for combo in combinations(candidates, size):
            deadline.check()
            chosen = tuple(sorted(prefix + combo))
            if accept(chosen):
                return chosen
    raise AssertionError("no accepted subset; the acceptance predicate is unsatisfiable")


def _dominating(g: Graph) -> Callable[[Tuple[int, ...]], bool]:
    full = (1 << g.n) - 1
    closed = g.closed_masks

    def accept(chosen: Tuple[int, ...]) -> bool:
        covered = 0
        for v in chosen:
            covered |= closed[v]
        return covered == full

    return accept


def _smallest_maximal_independent_set(g: Graph, deadline: Deadline) -> Tuple[int, ...]:
    """Independent dominating sets are exactly the maximal independent sets: the maximal cliques of the complement."""
    if g.n == 0:
        return ()
    best: Optional[Tuple[int, ...]] = None
    for clique in nx.find_cliques(to_networkx(complement(g))):
        deadline.check()
        found = tuple(sorted(clique))
        if best is None or (len(found), found) < (len(best), best):
            best = found
    assert best is not None
    return best


def greedy_coloring(g: Graph) -> Tuple[int, ...]:
    colors: List[int] = []
    for v in g.vertices:
        taken = {colors[u] for u in g.adjacency[v] if u < v}
        color = 0
        while color in taken:
            color += 1
        colors.append(color)
    return tuple(colors)


def k_coloring(g: Graph, k: int, deadline: Optional[Deadline] = None) -> Optional[Tuple[int, ...]]:
    """Lexicographically smallest canonical k-colouring (colours in first-use order), or None."""
    deadline = ensure_deadline(deadline)
    if g.n == 0:
        return ()
    if k <= 0:
        return None
    colors = [-1] * g.n
    earlier = [tuple(u for u in g.adjacency[v] if u < v) for v in g.vertices]

    def assign(v: int, used: int) -> bool:
        deadline.check()
        if v == g.n:
            return True
        blocked = {colors[u] for u in earlier[v]}
        for color in range(min(k, used + 1)):
            if color in blocked:
                continue
            colors[v] = color
            if assign(v + 1, max(used, color + 1)):
                return True
        colors[v] = -1
        return False

    return tuple(colors) if assign(0, 0) else None


def _chromatic(g: Graph, deadline: Deadline) -> Tuple[int, ...]:
    if g.n == 0:
        return ()
    upper = len(set(greedy_coloring(g)))
    lower = 2 if g.m else 1
    for k in range(lower, upper + 1):
        found = k_coloring(g, k, deadline)
        if found is not None:
            logger.debug("exact chi=%d on %s (greedy bound %d)", k, g.label, upper)
            return found
    raise AssertionError("greedy colouring bound was not attained")


def exact_solve(
    g: Graph,
    kind: ParameterKind,
    *,
    ceiling: Optional[int] = None,
    deadline: Optional[Deadline] = None,
    chi_budget_ms: Optional[int] = None,
) -> VertexSetSolution:
    if kind is ParameterKind.CHROMATIC_NUMBER:
        if deadline is None:
            deadline = Deadline.after(chi_budget_ms, label="exact chi") if chi_budget_ms else Deadline.unlimited()
        return certify(g, kind, _chromatic(g, deadline))

    _check_ceiling(g, ceiling, f"exact {kind.short}")
    deadline = ensure_deadline(deadline)
    full = (1 << g.n) - 1
    if kind is ParameterKind.MAX_INDEPENDENT_SET:
        witness = _bits(_max_independent_mask(g, True, deadline))
    elif kind is ParameterKind.MIN_VERTEX_COVER:
        witness = _bits(full & ~_max_independent_mask(g, False, deadline))
    elif kind is ParameterKind.MAX_CLIQUE:
        witness = _bits(_max_independent_mask(complement(g), True, deadline))
    elif kind is ParameterKind.MIN_DOMINATING_SET:
        witness = _first_subset(g.n, _dominating(g), deadline)
    elif kind is ParameterKind.MIN_INDEPENDENT_DOMINATING_SET:
        witness = _smallest_maximal_independent_set(g, deadline)
    elif kind is ParameterKind.MIN_FEEDBACK_VERTEX_SET:
        witness = _bits(full & ~_max_induced_forest_mask(g, False, deadline))
    else:  # pragma: no cover - enum is closed
        raise ValueError(f"Unsupported parameter kind: {kind}")
    return certify(g, kind, witness)


def max_induced_forest(
    g: Graph, *, ceiling: Optional[int] = None, deadline: Optional[Deadline] = None
) -> Tuple[int, Tuple[int, ...]]:
    """Largest vertex set inducing a forest (n - ν) with its lexicographically smallest witness."""
    _check_ceiling(g, ceiling, "exact induced forest")
    witness = _bits(_max_induced_forest_mask(g, True, ensure_deadline(deadline)))
    return len(witness), witness


def min_dominating_containing(
    g: Graph,
    required: Iterable[int],
    *,
    ceiling: Optional[int] = None,
    deadline: Optional[Deadline] = None,
) -> int:
    """Least size of a dominating set that contains every vertex of required."""
    _check_ceiling(g, ceiling, "exact gamma with required vertices")
    prefix = tuple(sorted(g.check_vertices(required)))
    pool = [v for v in g.vertices if v not in prefix]
    found = _first_subset(g.n, _dominating(g), ensure_deadline(deadline), pool=pool, prefix=prefix)
    return len(found)
