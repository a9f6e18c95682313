from __future__ import annotations

import pytest

from vertexparams import reports
from vertexparams.config import Config, OracleConfig, ReductionConfig
from vertexparams.errors import PreconditionError, SolverTimeout
from vertexparams.exact import exact_solve
from vertexparams.kinds import ALL_KINDS, ParameterKind
from vertexparams.reports import STATUS_ERROR, STATUS_OK, STATUS_TIMEOUT, solve_report
from vertexparams.solution import VertexSetSolution, verify_witness
from vertexparams.solvers import SOLVERS, SolverContext, SolverOutcome, resolve_solver, run_solver

ALPHA = ParameterKind.MAX_INDEPENDENT_SET
GAMMA = ParameterKind.MIN_DOMINATING_SET
INDDOM = ParameterKind.MIN_INDEPENDENT_DOMINATING_SET
CHI = ParameterKind.CHROMATIC_NUMBER

COMBOS = [(name, kind) for name, spec in SOLVERS.items() for kind in ALL_KINDS if kind in spec.kinds]


@pytest.mark.parametrize("name, kind", COMBOS, ids=[f"{n}-{k.short}" for n, k in COMBOS])
def test_every_solver_agrees_with_the_oracle(name, kind, petersen, c5):
    # blowups of dense graphs are out of reach for the fpt backing
    g, backing = (c5, "exact") if name == "via-clique-blowup" else (petersen, "fpt-nu")
    ctx = SolverContext(config=Config(reductions=ReductionConfig(backing_solver=backing)))
    outcome = run_solver(name, g, kind, ctx)
    assert outcome.solution.value == exact_solve(g, kind).value
    assert verify_witness(g, outcome.solution)


@pytest.mark.parametrize("backing", ["exact", "fpt-nu"])
def test_reductions_run_on_either_backing_solver(backing, c5):
    ctx = SolverContext(config=Config(reductions=ReductionConfig(backing_solver=backing)))
    outcome = run_solver("via-binary-search", c5, GAMMA, ctx)
    assert outcome.solution.value == 2
    assert outcome.oracle_calls == sum(trace.oracle_calls for trace in outcome.traces)
    assert ctx.counter.calls == outcome.oracle_calls


def test_direct_solvers_report_no_oracle_calls(c5):
    assert run_solver("exact", c5, ALPHA).oracle_calls is None
    assert run_solver("fpt-nu", c5, ALPHA).oracle_calls is None


@pytest.mark.parametrize(
    "name, kind",
    [("via-gamma-reduction", ALPHA), ("via-complement", GAMMA), ("via-clique-blowup", CHI), ("via-hereditary", INDDOM)],
)
def test_unsupported_combinations_are_rejected(name, kind, c5):
    with pytest.raises(PreconditionError):
        run_solver(name, c5, kind)


def test_unknown_solver(c5):
    with pytest.raises(PreconditionError):
        run_solver("simulated-annealing", c5, ALPHA)


def test_auto_follows_the_ceiling(c5, petersen):
    config = Config(oracle=OracleConfig(brute_force_ceiling=6))
    assert resolve_solver("auto", c5, config) == "exact"
    assert resolve_solver("auto", petersen, config) == "fpt-nu"
    assert resolve_solver("fpt-nu", c5, config) == "fpt-nu"


def test_report_for_k1(k1):
    report = solve_report(k1, ALPHA, "exact")
    assert report.ok
    payload = report.to_dict()
    assert payload["value"] == 1
    assert payload["witness"] == [0]
    assert payload["status"] == STATUS_OK
    assert "error" not in payload


def test_report_for_reductions_counts_calls(c4):
    report = solve_report(c4, GAMMA, "via-gamma-reduction")
    assert report.value == 2
    assert report.oracle_calls >= 2
    assert report.solver == "via-gamma-reduction"


def test_report_resolves_auto(c5):
    assert solve_report(c5, CHI, "auto").solver == "exact"


def test_report_turns_errors_into_a_status(c5):
    report = solve_report(c5, ALPHA, "via-gamma-reduction")
    assert report.status == STATUS_ERROR
    assert report.error.startswith("precondition:")
    assert report.value is None


def test_report_turns_timeouts_into_a_status(c5, monkeypatch):
    def expire(*_args, **_kwargs):
        raise SolverTimeout("fpt-nu alpha exceeded its budget of 1 ms")

    monkeypatch.setattr(reports, "run_solver", expire)
    report = solve_report(c5, ALPHA, "fpt-nu")
    assert report.status == STATUS_TIMEOUT
    assert "budget" in report.error
    assert report.to_dict()["value"] is None


def test_report_rejects_a_wrong_witness(c5, monkeypatch):
    def lie(*_args, **_kwargs):
        return SolverOutcome(VertexSetSolution(kind=ALPHA, value=2, witness=(0, 1), certified=True))

    monkeypatch.setattr(reports, "run_solver", lie)
    report = solve_report(c5, ALPHA, "exact")
    assert report.status == STATUS_ERROR
    assert report.error.startswith("contract")
