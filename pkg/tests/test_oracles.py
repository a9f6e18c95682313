from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from vertexparams.exact import exact_solve
from vertexparams.generators import path_graph
from vertexparams.kinds import Direction, ParameterKind
from vertexparams.oracles import CallCounter, DecisionOracle, SolutionOracle, ValueOracle, as_decision

ALPHA = ParameterKind.MAX_INDEPENDENT_SET
NU = ParameterKind.MIN_FEEDBACK_VERTEX_SET


def _value_oracle(kind: ParameterKind) -> ValueOracle:
    return ValueOracle(lambda g: exact_solve(g, kind).value, kind=kind)


def test_value_oracle_counts_and_logs(c5):
    oracle = _value_oracle(ALPHA)
    assert oracle(c5) == 2
    assert oracle(path_graph(3)) == 2
    assert oracle.calls == 2
    assert oracle.call_log == [(5, 2), (3, 2)]


def test_logging_can_be_disabled(c5):
    oracle = ValueOracle(lambda g: g.n, log_calls=False)
    oracle(c5)
    assert oracle.calls == 1
    assert oracle.call_log == []


def test_as_decision_for_alpha_on_c5(c5):
    oracle = _value_oracle(ALPHA)
    decide = as_decision(oracle, Direction.MAX)
    assert decide(c5, 2)
    assert not decide(c5, 3)
    assert decide.calls == 2
    assert oracle.calls == 2


def test_as_decision_for_nu_on_a_forest():
    decide = as_decision(_value_oracle(NU), Direction.MIN)
    assert decide(path_graph(6), 0)


def test_decision_oracle_accepts_direction_strings():
    decide = DecisionOracle(lambda _, k: k <= 3, "min")
    assert decide.direction is Direction.MIN
    assert decide(None, 1)
    assert decide.call_log == [(0, 1)]


def test_solution_oracle_records_values(c5):
    oracle = SolutionOracle(lambda g: exact_solve(g, ALPHA), kind=ALPHA)
    solution = oracle(c5)
    assert solution.witness == (0, 2)
    assert oracle.calls == 1
    assert oracle.counter.call_log == [(5, 2)]


def test_counter_is_safe_under_threads():
    counter = CallCounter()
    oracle = ValueOracle(lambda g: g.n, counter=counter)
    graph = path_graph(2)
    with ThreadPoolExecutor(max_workers=8) as pool:
        list(pool.map(lambda _: oracle(graph), range(400)))
    calls, log = counter.snapshot()
    assert calls == 400
    assert len(log) == 400
