"""Dominating set and independent dominating set in FPT(ν) time.

Fix D, the part of the solution inside F*. For every rooted subtree T of the
forest G - F*, a subset S of F* and a state d, A(T, S, d) is the least size of
D' within V(T) with N[D u D'] n F* = S where

    d = 0: the root is in D' and D u D' dominates T
    d = 1: the root is not in D' but D u D' dominates T
    d = 2: D u D' dominates T minus its root, and not the root.

Subtrees are built by the <- merges of decompose_forest. B(i, S) combines the
first i trees; the optimum for D is |D| + B(k, F*). The independent variant
restricts to D u D' independent. Subsets of F* are bitmasks over positions in
the ordered F*; tables store finite entries only, a missing entry is infinity.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple, Union

from .budget import Deadline, ensure_deadline
from .errors import ContractViolation
from .fpt import FstarSplit
from .graph import Graph, decompose_forest
from .kinds import ParameterKind
from .solution import VertexSetSolution, certify

logger = logging.getLogger(__name__)

ExtendedNatural = Union[int, float]
INF: float = math.inf

# state of the merged tree -> admissible (state of T1, state of T2) pairs
DOMINATING_RULES: Mapping[int, Tuple[Tuple[int, int], ...]] = {
    0: ((0, 0), (0, 1), (0, 2)),
    1: ((1, 0), (1, 1), (2, 0)),
    2: ((2, 1),),
}
INDEPENDENT_RULES: Mapping[int, Tuple[Tuple[int, int], ...]] = {
    0: ((0, 1), (0, 2)),
    1: ((1, 0), (1, 1), (2, 0)),
    2: ((2, 1),),
}

ALink = Optional[Tuple[int, int, int, int, int, int]]
BLink = Optional[Tuple[int, int, int, int]]


def ext_add(a: ExtendedNatural, b: ExtendedNatural) -> ExtendedNatural:
    return INF if a == INF or b == INF else a + b


@dataclass(frozen=True)
class Subtree:
    root: int
    vertices: FrozenSet[int]


@dataclass
class DominationDPTable:
    fstar: Tuple[int, ...]
    d_choice: Tuple[int, ...]
    independent: bool = False
    subtrees: List[Subtree] = field(default_factory=list)
    tree_roots: List[int] = field(default_factory=list)
    states: List[Dict[int, Dict[int, int]]] = field(default_factory=list)
    a_links: Dict[Tuple[int, int, int], ALink] = field(default_factory=dict)
    b_layers: List[Dict[int, int]] = field(default_factory=list)
    b_links: Dict[Tuple[int, int], BLink] = field(default_factory=dict)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.fstar)) - 1

    @property
    def a_entries(self) -> Dict[Tuple[int, int, int], int]:
        return {
            (sid, s, d): value
            for sid, by_state in enumerate(self.states)
            for d, row in by_state.items()
            for s, value in row.items()
        }

    @property
    def b_entries(self) -> Dict[Tuple[int, int], int]:
        return {(i, s): value for i, layer in enumerate(self.b_layers) for s, value in layer.items()}

    def a(self, sid: int, s: int, d: int) -> ExtendedNatural:
        return self.states[sid][d].get(s, INF)

    def b(self, i: int, s: int) -> ExtendedNatural:
        return self.b_layers[i].get(s, INF)

    def mask_of(self, vertices: Sequence[int]) -> int:
        position = {v: idx for idx, v in enumerate(self.fstar)}
        mask = 0
        for v in vertices:
            mask |= 1 << position[v]
        return mask

    def vertices_of(self, mask: int) -> Tuple[int, ...]:
        return tuple(v for idx, v in enumerate(self.fstar) if mask >> idx & 1)

    @property
    def optimum(self) -> ExtendedNatural:
        return ext_add(len(self.d_choice), self.b(len(self.tree_roots), self.full_mask))

    def reconstruct(self) -> Tuple[int, ...]:
        """Follow the back-pointers from B(k, F*) to the forest part D'."""
        k = len(self.tree_roots)
        if self.b(k, self.full_mask) == INF:
            raise ContractViolation("no dominating set extends this choice of D")
        chosen: List[int] = []
        pending: List[Tuple[int, int, int]] = []
        s = self.full_mask
        for i in range(k, 0, -1):
            link = self.b_links[(i, s)]
            assert link is not None
            s_prev, sid, s_tree, d = link
            pending.append((sid, s_tree, d))
            s = s_prev
        while pending:
            sid, s, d = pending.pop()
            link = self.a_links[(sid, s, d)]
            if link is None:
                if d == 0:
                    chosen.append(self.subtrees[sid].root)
                continue
            left, s1, d1, right, s2, d2 = link
            pending.append((left, s1, d1))
            pending.append((right, s2, d2))
        return tuple(sorted(chosen))


class _TableBuilder:
    def __init__(self, g: Graph, split: FstarSplit, d_choice: Sequence[int], independent: bool,
                 deadline: Deadline) -> None:
        self.g = g
        self.deadline = deadline
        self.table = DominationDPTable(fstar=split.fstar, d_choice=tuple(sorted(d_choice)),
                                       independent=independent)
        self.rules = INDEPENDENT_RULES if independent else DOMINATING_RULES
        position = {v: idx for idx, v in enumerate(split.fstar)}
        self.fstar_nbrs = {
            v: sum(1 << position[w] for w in g.adjacency[v] if w in position) for v in g.vertices
        }
        self.d_mask = self.table.mask_of(self.table.d_choice)
        self.nd_mask = self.d_mask
        for v in self.table.d_choice:
            self.nd_mask |= self.fstar_nbrs[v]
        self.forest = split.forest

    def leaf(self, v: int) -> int:
        sid = len(self.table.subtrees)
        self.table.subtrees.append(Subtree(root=v, vertices=frozenset((v,))))
        has_d_neighbour = bool(self.fstar_nbrs[v] & self.d_mask)
        rows: Dict[int, Dict[int, int]] = {0: {}, 1: {}, 2: {}}
        if not (self.table.independent and has_d_neighbour):
            rows[0][self.nd_mask | self.fstar_nbrs[v]] = 1
        if has_d_neighbour:
            rows[1][self.nd_mask] = 0
        else:
            rows[2][self.nd_mask] = 0
        self.table.states.append(rows)
        for d, row in rows.items():
            for s in row:
                self.table.a_links[(sid, s, d)] = None
        return sid

    def merge(self, left: int, right: int) -> int:
        """A(T1 <- T2, S, d) as the min over S1 u S2 = S of the admissible state pairs."""
        sid = len(self.table.subtrees)
        first, second = self.table.subtrees[left], self.table.subtrees[right]
        self.table.subtrees.append(Subtree(root=first.root, vertices=first.vertices | second.vertices))
        rows: Dict[int, Dict[int, int]] = {0: {}, 1: {}, 2: {}}
        lhs, rhs = self.table.states[left], self.table.states[right]
        for d, pairs in self.rules.items():
            row = rows[d]
            for d1, d2 in pairs:
                for s1, v1 in lhs[d1].items():
                    self.deadline.check()
                    for s2, v2 in rhs[d2].items():
                        s = s1 | s2
                        value = v1 + v2
                        if value < row.get(s, INF):
                            row[s] = value
                            self.table.a_links[(sid, s, d)] = (left, s1, d1, right, s2, d2)
        self.table.states.append(rows)
        return sid

    def build(self) -> DominationDPTable:
        plan = decompose_forest(self.g, self.forest)
        tree_of = {v: index for index, tree in enumerate(plan.trees) for v in tree.vertices}
        for v in self.forest:
            for w in self.g.adjacency[v]:
                if w in tree_of and tree_of[w] != tree_of[v]:
                    raise ContractViolation(f"forest vertices {v} and {w} sit in different trees")

        for tree in plan.trees:
            current = {v: self.leaf(v) for v in tree.vertices}
            for step in tree.steps:
                current[step.survivor] = self.merge(current[step.survivor], current[step.absorbed])
            self.table.tree_roots.append(current[tree.root])

        layer: Dict[int, int] = {self.nd_mask: 0}
        self.table.b_layers.append(layer)
        self.table.b_links[(0, self.nd_mask)] = None
        for i, sid in enumerate(self.table.tree_roots, start=1):
            state = self.table.states[sid]
            nxt: Dict[int, int] = {}
            for s1, v1 in layer.items():
                self.deadline.check()
                for d in (0, 1):
                    for s2, v2 in state[d].items():
                        s = s1 | s2
                        value = v1 + v2
                        if value < nxt.get(s, INF):
                            nxt[s] = value
                            self.table.b_links[(i, s)] = (s1, sid, s2, d)
            layer = nxt
            self.table.b_layers.append(layer)
        return self.table


def build_domination_table(
    g: Graph,
    fstar: Sequence[int],
    d_choice: Sequence[int],
    independent: bool = False,
    deadline: Optional[Deadline] = None,
) -> DominationDPTable:
    """Fill A/B (or A'/B') for one fixed D within F*."""
    blocked = set(fstar)
    split = FstarSplit(fstar=tuple(sorted(fstar)), forest=tuple(v for v in g.vertices if v not in blocked))
    return _TableBuilder(g, split, d_choice, independent, ensure_deadline(deadline)).build()


def _solve(g: Graph, independent: bool, deadline: Optional[Deadline],
           fstar: Optional[Sequence[int]]) -> VertexSetSolution:
    deadline = ensure_deadline(deadline)
    split = FstarSplit.of(g, deadline, fstar)
    kind = ParameterKind.MIN_INDEPENDENT_DOMINATING_SET if independent else ParameterKind.MIN_DOMINATING_SET
    best: Optional[DominationDPTable] = None
    for d_mask in range(1 << len(split.fstar)):
        d_choice = tuple(v for idx, v in enumerate(split.fstar) if d_mask >> idx & 1)
        if independent and any(g.has_edge(u, v) for u in d_choice for v in d_choice if u < v):
            continue
        table = _TableBuilder(g, split, d_choice, independent, deadline).build()
        if table.optimum < (best.optimum if best is not None else INF):
            best = table
    if best is None or best.optimum == INF:
        raise ContractViolation(f"no {kind.short} solution found; the DP tables are inconsistent")
    witness = best.d_choice + best.reconstruct()
    logger.debug("%s DP on %s: optimum %s with D=%s", kind.short, g.label, best.optimum, best.d_choice)
    return certify(g, kind, witness, {"fvs": list(split.fstar), "d_choice": list(best.d_choice)})


def dominating_fpt_nu(
    g: Graph, deadline: Optional[Deadline] = None, fstar: Optional[Sequence[int]] = None
) -> VertexSetSolution:
    return _solve(g, False, deadline, fstar)


def inddom_fpt_nu(
    g: Graph, deadline: Optional[Deadline] = None, fstar: Optional[Sequence[int]] = None
) -> VertexSetSolution:
    return _solve(g, True, deadline, fstar)
