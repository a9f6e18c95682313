"""DP tables against exhaustive enumeration, entry by entry."""
from __future__ import annotations

from itertools import combinations
from typing import Dict, Iterable, Sequence, Set

import pytest
from hypothesis import given, settings

from vertexparams.domination import (
    DOMINATING_RULES,
    INDEPENDENT_RULES,
    INF,
    DominationDPTable,
    build_domination_table,
    ext_add,
)
from vertexparams.errors import ContractViolation, PreconditionError
from vertexparams.exact import exact_solve
from vertexparams.fvs import min_fvs
from vertexparams.generators import cycle_graph, petersen_graph, star_graph
from vertexparams.graph import Graph
from vertexparams.kinds import ParameterKind
from vertexparams.solution import is_feasible

from .strategies import graphs

GAMMA = ParameterKind.MIN_DOMINATING_SET
INDDOM = ParameterKind.MIN_INDEPENDENT_DOMINATING_SET


def _closed(g: Graph, chosen: Iterable[int]) -> Set[int]:
    covered: Set[int] = set()
    for v in chosen:
        covered |= g.closed_neighbors(v)
    return covered


def _independent(g: Graph, chosen: Iterable[int]) -> bool:
    return not any(g.has_edge(u, v) for u, v in combinations(sorted(chosen), 2))


def _brute_subtree(g: Graph, table: DominationDPTable, sid: int, d: int) -> Dict[int, int]:
    subtree = table.subtrees[sid]
    vertices = sorted(subtree.vertices)
    fstar = set(table.fstar)
    best: Dict[int, int] = {}
    for size in range(len(vertices) + 1):
        for extra in combinations(vertices, size):
            chosen = set(table.d_choice) | set(extra)
            if table.independent and not _independent(g, chosen):
                continue
            covered = _closed(g, chosen)
            root_in = subtree.root in extra
            if (d == 0) != root_in:
                continue
            needed = set(vertices) - ({subtree.root} if d == 2 else set())
            if not needed <= covered:
                continue
            if d == 2 and subtree.root in covered:
                continue
            s = table.mask_of([v for v in covered if v in fstar])
            best.setdefault(s, size)
    return best


def _brute_layer(g: Graph, table: DominationDPTable, i: int) -> Dict[int, int]:
    vertices: Set[int] = set()
    for sid in table.tree_roots[:i]:
        vertices |= table.subtrees[sid].vertices
    ordered = sorted(vertices)
    fstar = set(table.fstar)
    best: Dict[int, int] = {}
    for size in range(len(ordered) + 1):
        for extra in combinations(ordered, size):
            chosen = set(table.d_choice) | set(extra)
            if table.independent and not _independent(g, chosen):
                continue
            covered = _closed(g, chosen)
            if not vertices <= covered:
                continue
            best.setdefault(table.mask_of([v for v in covered if v in fstar]), size)
    return best


def _d_choices(g: Graph, fstar: Sequence[int], independent: bool):
    for size in range(len(fstar) + 1):
        for d_choice in combinations(fstar, size):
            if not independent or _independent(g, d_choice):
                yield d_choice


def _check_tables(g: Graph, independent: bool) -> None:
    fstar = min_fvs(g).fvs
    best = INF
    for d_choice in _d_choices(g, fstar, independent):
        table = build_domination_table(g, fstar, d_choice, independent=independent)
        for sid in range(len(table.subtrees)):
            for d in (0, 1, 2):
                assert table.states[sid][d] == _brute_subtree(g, table, sid, d), (d_choice, sid, d)
        for i in range(len(table.tree_roots) + 1):
            assert table.b_layers[i] == _brute_layer(g, table, i), (d_choice, i)
        if table.optimum != INF:
            witness = table.d_choice + table.reconstruct()
            assert len(witness) == table.optimum
            assert is_feasible(g, INDDOM if independent else GAMMA, witness)
        best = min(best, table.optimum)
    assert best == exact_solve(g, INDDOM if independent else GAMMA).value


def test_ext_add_saturates():
    assert ext_add(2, 3) == 5
    assert ext_add(INF, 3) == INF
    assert ext_add(1, INF) == INF
    assert min(INF, 4) == 4


def test_independent_rules_drop_adjacent_roots():
    assert set(DOMINATING_RULES[0]) - set(INDEPENDENT_RULES[0]) == {(0, 0)}
    assert DOMINATING_RULES[1] == INDEPENDENT_RULES[1]
    assert DOMINATING_RULES[2] == INDEPENDENT_RULES[2] == ((2, 1),)


def test_leaf_entries_follow_the_base_cases(c4):
    # F* = {0}; the forest is the path 1-2-3
    table = build_domination_table(c4, [0], [0])
    full = table.full_mask
    leaf_of = {table.subtrees[sid].root: sid for sid in range(len(table.subtrees)) if len(table.subtrees[sid].vertices) == 1}
    assert table.states[leaf_of[1]] == {0: {full: 1}, 1: {full: 0}, 2: {}}
    assert table.states[leaf_of[2]] == {0: {full: 1}, 1: {}, 2: {full: 0}}
    empty_d = build_domination_table(c4, [0], [])
    assert empty_d.a(leaf_of[1], 1, 0) == 1
    assert empty_d.a(leaf_of[1], 0, 2) == 0
    assert empty_d.a(leaf_of[1], 0, 1) == INF


def test_independent_leaf_excludes_neighbours_of_d(c4):
    table = build_domination_table(c4, [0], [0], independent=True)
    leaf = next(sid for sid, tree in enumerate(table.subtrees) if tree.vertices == frozenset({1}))
    assert table.states[leaf][0] == {}
    assert table.states[leaf][1] == {table.full_mask: 0}


def test_b_starts_from_the_neighbourhood_of_d(c4):
    table = build_domination_table(c4, [0], [])
    assert table.b_layers[0] == {0: 0}
    assert table.optimum == exact_solve(c4, GAMMA).value
    assert table.b(len(table.tree_roots), table.full_mask) == 2


def test_reconstruct_needs_a_finite_optimum():
    # F* = {0, 1} with D = {} on two isolated vertices can never dominate F*
    g = Graph(n=2)
    table = build_domination_table(g, [0, 1], [])
    assert table.optimum == INF
    with pytest.raises(ContractViolation):
        table.reconstruct()


def test_a_cyclic_remainder_is_rejected():
    # the empty set is not a feedback vertex set of C4
    g = cycle_graph(4)
    with pytest.raises(PreconditionError):
        build_domination_table(g, [], [])


@pytest.mark.parametrize("g", [cycle_graph(4), cycle_graph(5), star_graph(4), petersen_graph()])
@pytest.mark.parametrize("independent", [False, True])
def test_tables_match_enumeration_on_named_graphs(g, independent):
    _check_tables(g, independent)


@settings(max_examples=25, deadline=None)
@given(graphs(max_n=7))
def test_dominating_tables_match_enumeration(g):
    _check_tables(g, independent=False)


@settings(max_examples=25, deadline=None)
@given(graphs(max_n=7))
def test_independent_tables_match_enumeration(g):
    _check_tables(g, independent=True)
