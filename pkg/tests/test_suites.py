from __future__ import annotations

from dataclasses import replace

import pytest

from vertexparams import suites
from vertexparams.config import Config, VerifyConfig
from vertexparams.errors import SizeLimitError
from vertexparams.generators import cycle_graph
from vertexparams.suites import SUITES, run_suite, run_suites, run_trial, trial_rng

SMALL = Config(verify=VerifyConfig(trials=3, seed=7, min_n=3, max_n=7, gadget_max_n=5, reduction_max_n=6))


@pytest.mark.parametrize("suite", list(SUITES))
def test_every_suite_passes_on_small_graphs(suite):
    result = run_suite(suite, SMALL, trials=3)
    assert result.ok, result.to_dict()["failures"]
    assert result.to_dict()["trials"] == 3


def test_trials_are_reproducible():
    first = run_trial("fpt-vs-oracle", 2, SMALL)
    second = run_trial("fpt-vs-oracle", 2, SMALL)
    assert first == second
    assert trial_rng("x", 7, 1).random() == trial_rng("x", 7, 1).random()
    assert trial_rng("x", 7, 1).random() != trial_rng("x", 7, 2).random()


def test_run_suites_expands_all():
    results = run_suites(["all"], replace(SMALL, verify=replace(SMALL.verify, trials=1)))
    assert [result.suite for result in results] == list(SUITES)


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("speed", SMALL)


def test_failures_are_collected(monkeypatch):
    def always_fails(rng, config):
        return cycle_graph(3), ["made up"]

    monkeypatch.setitem(suites.SUITES, "chi-window", always_fails)
    payload = run_suite("chi-window", SMALL, trials=2).to_dict()
    assert payload["failed"] == 2
    assert payload["failures"][0] == {"trial": 0, "graph": "C3", "messages": ["made up"]}


def test_solver_errors_become_failures(monkeypatch):
    def too_big(rng, config):
        raise SizeLimitError("graph too large")

    monkeypatch.setitem(suites.SUITES, "inequality-chain", too_big)
    trial = run_trial("inequality-chain", 0, SMALL)
    assert not trial.passed
    assert trial.graph == "inequality-chain#0"
    assert trial.failures == ["size: graph too large"]
