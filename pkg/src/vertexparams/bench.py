from __future__ import annotations

import csv
import io
import logging
import random
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence

from .config import BenchConfig, Config
from .errors import GraphInputError
from .generators import RandomGraphSpec, cycle_sparse, random_graph
from .graph import Graph
from .kinds import ParameterKind
from .reports import solve_report

logger = logging.getLogger(__name__)

FAMILIES = ("cycle-sparse", "gnp")
COLUMNS = ("family", "n", "m", "seed", "parameter", "solver", "value", "status", "runtime_ms")


@dataclass(frozen=True)
class BenchRow:
    family: str
    n: int
    m: int
    seed: int
    parameter: str
    solver: str
    value: Optional[int]
    status: str
    runtime_ms: int

    def to_dict(self) -> Dict[str, object]:
        return {column: getattr(self, column) for column in COLUMNS}


def family_graph(family: str, n: int, seed: int, bench: BenchConfig) -> Graph:
    if family == "cycle-sparse":
        return cycle_sparse(n, bench.extra_edges, seed=seed)
    if family == "gnp":
        # expected degree around 3 keeps ν small enough for the FPT solvers
        p = min(1.0, 3.0 / max(n - 1, 1))
        return random_graph(RandomGraphSpec(n=n, edge_probability=p, seed=seed))
    raise GraphInputError(f"Unknown family '{family}' (expected one of: {', '.join(FAMILIES)}).")


def run_bench(
    kinds: Sequence[ParameterKind],
    solver: str,
    config: Optional[Config] = None,
    seed: int = 0,
) -> Iterator[BenchRow]:
    config = config if config is not None else Config()
    bench = config.bench
    rng = random.Random(f"bench/{bench.family}/{seed}")
    for n in bench.sizes:
        for _ in range(bench.repeats):
            graph_seed = rng.getrandbits(63)
            g = family_graph(bench.family, n, graph_seed, bench)
            for kind in kinds:
                report = solve_report(g, kind, solver, config)
                logger.info("bench %s n=%d %s: %s in %d ms", bench.family, n, kind.short, report.status, report.runtime_ms)
                yield BenchRow(
                    family=bench.family,
                    n=g.n,
                    m=g.m,
                    seed=graph_seed,
                    parameter=kind.short,
                    solver=report.solver,
                    value=report.value,
                    status=report.status,
                    runtime_ms=report.runtime_ms,
                )


def rows_to_csv(rows: Sequence[BenchRow]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.to_dict())
    return buffer.getvalue()


def rows_to_records(rows: Sequence[BenchRow]) -> List[Dict[str, object]]:
    return [row.to_dict() for row in rows]
