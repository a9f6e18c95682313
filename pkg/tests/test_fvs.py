from __future__ import annotations

import time
import networkx as nx
import pytest
from hypothesis import given, settings

from vertexparams.budget import Deadline
from vertexparams.errors import SolverTimeout
from vertexparams.exact import exact_solve
from vertexparams.fvs import min_fvs, reduce_instance, shortest_cycle
from vertexparams.generators import complete_graph, cycle_graph, path_graph, star_graph
from vertexparams.graph import Graph, to_multigraph
from vertexparams.kinds import ParameterKind

from .strategies import forests, graphs

NU = ParameterKind.MIN_FEEDBACK_VERTEX_SET


def _leaves_a_forest(g: Graph, removed) -> bool:
    rest = nx.Graph()
    rest.add_nodes_from(v for v in g.vertices if v not in set(removed))
    rest.add_edges_from((u, v) for u, v in g.edges if u in rest and v in rest)
    return rest.number_of_nodes() == 0 or nx.is_forest(rest)


@pytest.mark.parametrize("g", [path_graph(6), star_graph(4), Graph(n=3), Graph(n=0)])
def test_forests_need_nothing(g):
    result = min_fvs(g)
    assert result.fvs == ()
    assert result.size == 0
    assert result.forest_check


def test_c4_needs_one_vertex(c4):
    result = min_fvs(c4)
    assert result.size == 1
    assert _leaves_a_forest(c4, result.fvs)


def test_petersen_needs_three(petersen):
    result = min_fvs(petersen)
    assert result.size == 3
    assert result.forest_check
    assert _leaves_a_forest(petersen, result.fvs)


def test_k5_needs_three():
    assert min_fvs(complete_graph(5)).size == 3


def test_min_fvs_is_deterministic(petersen):
    assert min_fvs(petersen) == min_fvs(petersen)


def test_reduce_instance_consumes_a_path():
    reduced, forced = reduce_instance(to_multigraph(path_graph(5)))
    assert len(reduced) == 0
    assert forced == frozenset()


def test_reduce_instance_turns_a_triangle_into_one_forced_vertex():
    reduced, forced = reduce_instance(to_multigraph(cycle_graph(3)))
    assert len(reduced) == 0
    assert len(forced) == 1


def test_reduce_instance_forces_one_end_of_a_double_edge():
    mg = nx.MultiGraph([(0, 1), (0, 1)])
    reduced, forced = reduce_instance(mg)
    assert len(reduced) == 0
    assert len(forced) == 1
    assert len(mg) == 2


def test_reduce_instance_skips_already_forced_vertices():
    mg = nx.MultiGraph([(0, 0)])
    reduced, forced = reduce_instance(mg, forced=[0])
    assert len(reduced) == 0
    assert forced == frozenset()


def test_reduce_instance_keeps_degree_three_cores():
    reduced, forced = reduce_instance(to_multigraph(complete_graph(4)))
    assert sorted(reduced.nodes) == [0, 1, 2, 3]
    assert forced == frozenset()


def test_shortest_cycle_prefers_loops_then_parallel_edges(petersen):
    looped = to_multigraph(complete_graph(4))
    looped.add_edge(2, 2)
    assert shortest_cycle(looped) == [2]
    doubled = to_multigraph(complete_graph(4))
    doubled.add_edge(1, 3)
    assert shortest_cycle(doubled) == [1, 3]
    assert len(shortest_cycle(to_multigraph(petersen))) == 5
    assert shortest_cycle(to_multigraph(path_graph(4))) is None


def test_shortest_cycle_of_k4_is_a_triangle():
    assert len(shortest_cycle(to_multigraph(complete_graph(4)))) == 3


def test_min_fvs_times_out(petersen):
    with pytest.raises(SolverTimeout):
        min_fvs(petersen, Deadline(timeout_ms=1, started=time.monotonic() - 10.0))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=11))
def test_min_fvs_matches_the_exact_oracle(g):
    result = min_fvs(g)
    assert result.size == exact_solve(g, NU).value
    assert result.forest_check
    assert _leaves_a_forest(g, result.fvs)


@settings(max_examples=40, deadline=None)
@given(forests(max_n=12))
def test_forests_reduce_to_nothing(g):
    reduced, forced = reduce_instance(to_multigraph(g))
    assert len(reduced) == 0
    assert forced == frozenset()


def test_reduce_instance_smooths_a_diamond_into_parallel_edges():
    diamond = Graph(n=4, edges=frozenset({(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)}))
    mg = to_multigraph(diamond)
    reduced, forced = reduce_instance(mg)
    assert sorted(reduced.nodes) == [0, 1]
    assert reduced.number_of_edges(0, 1) == 3
    assert forced == frozenset()
    assert mg.number_of_nodes() == 4
    assert shortest_cycle(reduced) == [0, 1]
