from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional

from .config import Config
from .graph import Graph
from .kinds import ALL_KINDS, ParameterKind
from .reports import SolveReport, solve_report

ALPHA = ParameterKind.MAX_INDEPENDENT_SET
TAU = ParameterKind.MIN_VERTEX_COVER
OMEGA = ParameterKind.MAX_CLIQUE
CHI = ParameterKind.CHROMATIC_NUMBER
GAMMA = ParameterKind.MIN_DOMINATING_SET
INDDOM = ParameterKind.MIN_INDEPENDENT_DOMINATING_SET
NU = ParameterKind.MIN_FEEDBACK_VERTEX_SET

RELATIONS = ("α+τ=n", "α≥i≥γ", "Δ+1≥χ≥ω", "τ≥ν")


def parameter_inequalities(values: Mapping[ParameterKind, int], n: int, max_degree: int) -> List[str]:
    """The relations among α+τ=n, α≥i≥γ, Δ+1≥χ≥ω and τ≥ν that fail for these values."""
    missing = [kind.short for kind in ALL_KINDS if kind not in values]
    if missing:
        raise ValueError(f"Missing parameter values: {', '.join(missing)}.")
    alpha, tau, omega, chi = values[ALPHA], values[TAU], values[OMEGA], values[CHI]
    gamma, inddom, nu = values[GAMMA], values[INDDOM], values[NU]
    checks = (
        alpha + tau == n,
        alpha >= inddom >= gamma,
        max_degree + 1 >= chi >= omega,
        tau >= nu,
    )
    return [relation for relation, holds in zip(RELATIONS, checks) if not holds]


@dataclass
class ParameterMatrix:
    graph: str
    n: int
    max_degree: int
    entries: Dict[ParameterKind, SolveReport] = field(default_factory=dict)

    @property
    def values(self) -> Dict[ParameterKind, int]:
        return {kind: report.value for kind, report in self.entries.items() if report.ok and report.value is not None}

    @property
    def complete(self) -> bool:
        return len(self.values) == len(ALL_KINDS)

    @property
    def violations(self) -> Optional[List[str]]:
        if not self.complete:
            return None
        return parameter_inequalities(self.values, self.n, self.max_degree)

    @property
    def ok(self) -> bool:
        return self.complete and not self.violations

    def to_dict(self) -> Dict[str, object]:
        return {
            "graph": self.graph,
            "n": self.n,
            "max_degree": self.max_degree,
            "values": {kind.short: self.values.get(kind) for kind in ALL_KINDS},
            "entries": {
                kind.short: {
                    "status": report.status,
                    "solver": report.solver,
                    "runtime_ms": report.runtime_ms,
                    **({"error": report.error} if report.error else {}),
                }
                for kind, report in self.entries.items()
            },
            "inequalities": {"checked": self.complete, "violations": self.violations or []},
        }


def compute_matrix(g: Graph, solver: Optional[str] = None, config: Optional[Config] = None) -> ParameterMatrix:
    """All seven parameters of g; each entry runs under its own time budget."""
    config = config if config is not None else Config()
    chosen = solver or config.solver.matrix_solver
    matrix = ParameterMatrix(graph=g.label, n=g.n, max_degree=g.max_degree)
    for kind in ALL_KINDS:
        matrix.entries[kind] = solve_report(g, kind, chosen, config)
    return matrix
