from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .budget import Deadline
from .config import Config
from .errors import SolverTimeout, VertexParamsError
from .graph import Graph
from .kinds import ParameterKind
from .oracles import CallCounter
from .solution import verify_witness
from .solvers import SolverContext, resolve_solver, run_solver

logger = logging.getLogger(__name__)

STATUS_OK = "ok"
STATUS_TIMEOUT = "timeout"
STATUS_ERROR = "error"


@dataclass
class SolveReport:
    graph: str
    parameter: str
    solver: str
    value: Optional[int] = None
    witness: List[int] = field(default_factory=list)
    oracle_calls: Optional[int] = None
    runtime_ms: int = 0
    status: str = STATUS_OK
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.status == STATUS_OK

    def to_dict(self) -> Dict[str, object]:
        payload: Dict[str, object] = {
            "graph": self.graph,
            "parameter": self.parameter,
            "value": self.value,
            "witness": list(self.witness),
            "solver": self.solver,
            "oracle_calls": self.oracle_calls,
            "runtime_ms": self.runtime_ms,
            "status": self.status,
        }
        if self.error is not None:
            payload["error"] = self.error
        return payload


def solve_report(g: Graph, kind: ParameterKind, solver: str, config: Optional[Config] = None) -> SolveReport:
    """Run one solver under the configured time budget and package the outcome; never raises solver errors."""
    config = config if config is not None else Config()
    name = resolve_solver(solver, g, config)
    report = SolveReport(graph=g.label, parameter=kind.short, solver=name)
    ctx = SolverContext(
        config=config,
        deadline=Deadline.after(config.solver.timeout_ms, label=f"{name} {kind.short}"),
        counter=CallCounter(log_calls=False),
    )
    started = time.perf_counter()
    try:
        outcome = run_solver(name, g, kind, ctx)
    except SolverTimeout as exc:
        report.status, report.error = STATUS_TIMEOUT, str(exc)
    except VertexParamsError as exc:
        report.status, report.error = STATUS_ERROR, f"{exc.code}: {exc}"
    else:
        solution = outcome.solution
        report.value = solution.value
        report.witness = list(solution.witness)
        report.oracle_calls = outcome.oracle_calls
        if not verify_witness(g, solution):
            report.status, report.error = STATUS_ERROR, "contract: witness failed verification"
    report.runtime_ms = int(round((time.perf_counter() - started) * 1000))
    if not report.ok:
        logger.warning("%s for %s on %s: %s", name, kind.short, g.label, report.error)
    return report
