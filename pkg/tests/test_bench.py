from __future__ import annotations

import pytest

from vertexparams.bench import COLUMNS, family_graph, rows_to_csv, rows_to_records, run_bench
from vertexparams.config import BenchConfig, Config
from vertexparams.errors import GraphInputError
from vertexparams.kinds import ParameterKind

GAMMA = ParameterKind.MIN_DOMINATING_SET
NU = ParameterKind.MIN_FEEDBACK_VERTEX_SET


def _config(**bench) -> Config:
    return Config(bench=BenchConfig(**bench))


def test_rows_cover_sizes_repeats_and_kinds():
    rows = list(run_bench([GAMMA, NU], "fpt-nu", _config(sizes=(12, 20), repeats=2, extra_edges=2)))
    assert len(rows) == 2 * 2 * 2
    assert [row.n for row in rows[::4]] == [12, 20]
    assert all(row.status == "ok" for row in rows)
    assert all(row.value is not None and row.value <= 2 for row in rows if row.parameter == "nu")


def test_bench_is_seeded():
    config = _config(family="gnp", sizes=(15,))
    first = [row.seed for row in run_bench([GAMMA], "fpt-nu", config, seed=4)]
    assert first == [row.seed for row in run_bench([GAMMA], "fpt-nu", config, seed=4)]
    assert first != [row.seed for row in run_bench([GAMMA], "fpt-nu", config, seed=5)]


def test_csv_and_records():
    rows = list(run_bench([GAMMA], "exact", _config(sizes=(8,))))
    text = rows_to_csv(rows)
    assert text.splitlines()[0] == ",".join(COLUMNS)
    assert len(text.splitlines()) == 2
    assert rows_to_records(rows)[0]["parameter"] == "gamma"


def test_unknown_family():
    with pytest.raises(GraphInputError):
        family_graph("grid", 9, 0, BenchConfig())
