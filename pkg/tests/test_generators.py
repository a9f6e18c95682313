from __future__ import annotations

import pytest

from vertexparams.errors import GraphInputError
from vertexparams.fvs import min_fvs
from vertexparams.generators import (
    RandomGraphSpec,
    complete_bipartite_graph,
    cycle_graph,
    cycle_sparse,
    named_graph,
    petersen_graph,
    random_graph,
    star_graph,
    wheel_graph,
)


def test_random_graph_is_reproducible():
    spec = RandomGraphSpec(n=12, edge_probability=0.4, seed=3)
    assert random_graph(spec) == random_graph(spec)
    assert random_graph(spec).name == "gnp-n12-p0.4-s3"
    assert spec.to_dict() == {"n": 12, "edge_probability": 0.4, "seed": 3}


def test_random_graph_extremes():
    assert random_graph(RandomGraphSpec(n=6, edge_probability=0.0)).m == 0
    assert random_graph(RandomGraphSpec(n=6, edge_probability=1.0)).m == 15


@pytest.mark.parametrize("n, p", [(-1, 0.5), (4, 1.5), (4, -0.1)])
def test_random_graph_rejects_bad_specs(n, p):
    with pytest.raises(GraphInputError):
        RandomGraphSpec(n=n, edge_probability=p)


def test_cycle_sparse_bounds_the_feedback_vertex_set():
    g = cycle_sparse(40, 3, seed=5)
    assert g.m == 39 + 3
    assert min_fvs(g).size <= 3
    assert cycle_sparse(40, 3, seed=5) == g


def test_cycle_sparse_caps_extra_edges_at_completeness():
    assert cycle_sparse(4, 10, seed=1).m == 6


def test_named_graphs():
    assert named_graph("cycle:5") == cycle_graph(5)
    assert named_graph("complete-bipartite:2,3") == complete_bipartite_graph(2, 3)
    assert named_graph("petersen") == petersen_graph()
    assert named_graph(" star:4 ").n == 5


def test_layouts(petersen):
    assert star_graph(3).neighbors(0) == frozenset({1, 2, 3})
    assert wheel_graph(5).degree(5) == 5
    assert petersen.m == 15
    assert all(petersen.degree(v) == 3 for v in petersen.vertices)


@pytest.mark.parametrize("text", ["dodecahedron", "cycle", "cycle:a", "complete-bipartite:3", "cycle:2"])
def test_named_graph_errors(text):
    with pytest.raises(GraphInputError):
        named_graph(text)
