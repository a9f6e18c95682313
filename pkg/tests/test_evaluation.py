from __future__ import annotations

import pytest
from hypothesis import given, settings

from vertexparams.config import Config, SolverConfig
from vertexparams.evaluation import compute_matrix, parameter_inequalities
from vertexparams.kinds import ALL_KINDS, ParameterKind

from .strategies import graphs

C5_VALUES = {"alpha": 2, "tau": 3, "omega": 2, "chi": 3, "gamma": 2, "i": 2, "nu": 1}


def _by_kind(values):
    return {ParameterKind.parse(short): value for short, value in values.items()}


def test_c5_satisfies_every_relation():
    assert parameter_inequalities(_by_kind(C5_VALUES), n=5, max_degree=2) == []


def test_broken_values_are_reported():
    values = _by_kind({**C5_VALUES, "tau": 0})
    assert parameter_inequalities(values, n=5, max_degree=2) == ["α+τ=n", "τ≥ν"]


def test_missing_values_are_rejected():
    with pytest.raises(ValueError):
        parameter_inequalities(_by_kind({"alpha": 1}), n=1, max_degree=0)


@pytest.mark.parametrize("solver", ["exact", "fpt-nu", "auto"])
def test_matrix_of_c5(c5, solver):
    matrix = compute_matrix(c5, solver=solver)
    assert matrix.ok
    assert {kind.short: value for kind, value in matrix.values.items()} == C5_VALUES


def test_matrix_of_k1_and_the_empty_graph(k1, empty):
    k1_values = compute_matrix(k1).to_dict()["values"]
    assert k1_values == {"alpha": 1, "tau": 0, "omega": 1, "chi": 1, "gamma": 1, "i": 1, "nu": 0}
    empty_values = compute_matrix(empty).to_dict()["values"]
    assert set(empty_values.values()) == {0}


def test_matrix_payload(petersen):
    payload = compute_matrix(petersen).to_dict()
    assert payload["graph"] == "petersen"
    assert payload["max_degree"] == 3
    assert payload["inequalities"] == {"checked": True, "violations": []}
    assert set(payload["entries"]) == {kind.short for kind in ALL_KINDS}
    assert all(entry["status"] == "ok" for entry in payload["entries"].values())


def test_matrix_uses_the_configured_solver(c5):
    config = Config(solver=SolverConfig(matrix_solver="exact"))
    payload = compute_matrix(c5, config=config).to_dict()
    assert {entry["solver"] for entry in payload["entries"].values()} == {"exact"}


def test_incomplete_matrix_skips_the_inequality_check(c5):
    # the gamma reduction answers only for gamma and i
    matrix = compute_matrix(c5, solver="via-gamma-reduction")
    assert not matrix.complete
    assert matrix.violations is None
    assert matrix.to_dict()["inequalities"] == {"checked": False, "violations": []}


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=9))
def test_random_matrices_satisfy_the_relations(g):
    matrix = compute_matrix(g, solver="fpt-nu")
    assert matrix.complete
    assert matrix.violations == []
