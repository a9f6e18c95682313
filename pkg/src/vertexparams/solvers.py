"""Named solvers: every way this package can compute a parameter, behind one call shape."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Optional

from .budget import Deadline
from .config import Config
from .domination import dominating_fpt_nu, inddom_fpt_nu
from .errors import ContractViolation, PreconditionError
from .exact import exact_solve, k_coloring
from .fpt import chromatic_fpt_nu, clique_fpt_nu, independent_set_fpt_nu, vertex_cover_fpt_nu
from .fvs import min_fvs
from .graph import Graph
from .kinds import ALL_KINDS, ParameterKind
from .oracles import CallCounter, SolutionOracle, ValueOracle, as_decision
from .reductions import (
    HEREDITARY_FOR_KIND,
    HereditaryProperty,
    ReductionTrace,
    constructive_gamma,
    constructive_inddom,
    decide_value,
    hereditary_solution,
    inddom_via_clique_blowup,
    value_via_complement,
)
from .solution import VertexSetSolution, certify

logger = logging.getLogger(__name__)

ALPHA = ParameterKind.MAX_INDEPENDENT_SET
OMEGA = ParameterKind.MAX_CLIQUE
CHI = ParameterKind.CHROMATIC_NUMBER
GAMMA = ParameterKind.MIN_DOMINATING_SET
INDDOM = ParameterKind.MIN_INDEPENDENT_DOMINATING_SET
NU = ParameterKind.MIN_FEEDBACK_VERTEX_SET


def feedback_vertex_set_fpt(g: Graph, deadline: Optional[Deadline] = None) -> VertexSetSolution:
    result = min_fvs(g, deadline)
    return certify(g, NU, result.fvs, {"forest_check": result.forest_check})


FPT_SOLVERS: Dict[ParameterKind, Callable[..., VertexSetSolution]] = {
    ParameterKind.MAX_INDEPENDENT_SET: independent_set_fpt_nu,
    ParameterKind.MIN_VERTEX_COVER: vertex_cover_fpt_nu,
    ParameterKind.MAX_CLIQUE: clique_fpt_nu,
    ParameterKind.CHROMATIC_NUMBER: chromatic_fpt_nu,
    ParameterKind.MIN_DOMINATING_SET: dominating_fpt_nu,
    ParameterKind.MIN_INDEPENDENT_DOMINATING_SET: inddom_fpt_nu,
    ParameterKind.MIN_FEEDBACK_VERTEX_SET: feedback_vertex_set_fpt,
}


@dataclass
class SolverContext:
    config: Config = field(default_factory=Config)
    deadline: Deadline = field(default_factory=Deadline.unlimited)
    counter: CallCounter = field(default_factory=CallCounter)

    def exact(self, g: Graph, kind: ParameterKind) -> VertexSetSolution:
        return exact_solve(g, kind, ceiling=self.config.oracle.brute_force_ceiling, deadline=self.deadline)

    def fpt(self, g: Graph, kind: ParameterKind) -> VertexSetSolution:
        return FPT_SOLVERS[kind](g, self.deadline)

    def backing(self, g: Graph, kind: ParameterKind) -> VertexSetSolution:
        if self.config.reductions.backing_solver == "exact":
            return self.exact(g, kind)
        return self.fpt(g, kind)

    def value_oracle(self, kind: ParameterKind) -> ValueOracle:
        return ValueOracle(lambda h: self.backing(h, kind).value, kind=kind, counter=self.counter)

    def solution_oracle(self, kind: ParameterKind) -> SolutionOracle:
        return SolutionOracle(lambda h: self.backing(h, kind), kind=kind, counter=self.counter)

    def property_oracle(self, prop: HereditaryProperty) -> ValueOracle:
        if prop is HereditaryProperty.INDUCED_FOREST:
            return ValueOracle(lambda h: h.n - self.backing(h, NU).value, counter=self.counter)
        return self.value_oracle(ALPHA if prop is HereditaryProperty.INDEPENDENT_SET else OMEGA)


@dataclass
class SolverOutcome:
    solution: VertexSetSolution
    oracle_calls: Optional[int] = None
    traces: list = field(default_factory=list)


SolverFn = Callable[[Graph, ParameterKind, SolverContext], SolverOutcome]


def _exact(g: Graph, kind: ParameterKind, ctx: SolverContext) -> SolverOutcome:
    return SolverOutcome(ctx.exact(g, kind))


def _fpt(g: Graph, kind: ParameterKind, ctx: SolverContext) -> SolverOutcome:
    return SolverOutcome(ctx.fpt(g, kind))


def _traced(solution: VertexSetSolution, *traces: ReductionTrace) -> SolverOutcome:
    return SolverOutcome(solution, oracle_calls=sum(t.oracle_calls for t in traces), traces=list(traces))


def _via_hereditary(g: Graph, kind: ParameterKind, ctx: SolverContext) -> SolverOutcome:
    prop, _ = HEREDITARY_FOR_KIND[kind]
    return _traced(*hereditary_solution(g, kind, ctx.property_oracle(prop)))


def _via_gamma(g: Graph, kind: ParameterKind, ctx: SolverContext) -> SolverOutcome:
    return _traced(*constructive_gamma(g, ctx.value_oracle(GAMMA)))


def _via_inddom(g: Graph, kind: ParameterKind, ctx: SolverContext) -> SolverOutcome:
    return _traced(*constructive_inddom(g, ctx.value_oracle(INDDOM)))


def _via_complement(g: Graph, kind: ParameterKind, ctx: SolverContext) -> SolverOutcome:
    dual = OMEGA if kind is ALPHA else ALPHA
    return _traced(*value_via_complement(g, ctx.solution_oracle(dual), kind))


def _via_blowup(g: Graph, kind: ParameterKind, ctx: SolverContext) -> SolverOutcome:
    return _traced(*inddom_via_clique_blowup(g, ctx.solution_oracle(INDDOM)))


def _via_binary_search(g: Graph, kind: ParameterKind, ctx: SolverContext) -> SolverOutcome:
    """Decision oracle -> value by binary search -> witness from the matching constructive reduction."""
    value, decided = decide_value(g, as_decision(ctx.value_oracle(kind), kind.direction), kind)
    if kind is CHI:
        coloring = k_coloring(g, value, ctx.deadline)
        if coloring is None:
            raise ContractViolation(f"no proper colouring with the decided {value} colours")
        outcome = _traced(certify(g, kind, coloring, {"decided": value}), decided)
    elif kind is GAMMA:
        outcome = _traced(*constructive_gamma(g, ctx.value_oracle(kind)), decided)
    elif kind is INDDOM:
        outcome = _traced(*constructive_inddom(g, ctx.value_oracle(kind)), decided)
    else:
        prop, _ = HEREDITARY_FOR_KIND[kind]
        outcome = _traced(*hereditary_solution(g, kind, ctx.property_oracle(prop)), decided)
    if outcome.solution.value != value:
        raise ContractViolation(f"binary search decided {value} but the witness has value {outcome.solution.value}")
    return outcome


@dataclass(frozen=True)
class SolverSpec:
    name: str
    run: SolverFn
    kinds: FrozenSet[ParameterKind]


SOLVERS: Dict[str, SolverSpec] = {
    spec.name: spec
    for spec in (
        SolverSpec("exact", _exact, frozenset(ALL_KINDS)),
        SolverSpec("fpt-nu", _fpt, frozenset(ALL_KINDS)),
        SolverSpec("via-hereditary", _via_hereditary, frozenset(HEREDITARY_FOR_KIND)),
        SolverSpec("via-gamma-reduction", _via_gamma, frozenset({GAMMA})),
        SolverSpec("via-inddom-reduction", _via_inddom, frozenset({INDDOM})),
        SolverSpec("via-binary-search", _via_binary_search, frozenset(ALL_KINDS)),
        SolverSpec("via-complement", _via_complement, frozenset({ALPHA, OMEGA})),
        SolverSpec("via-clique-blowup", _via_blowup, frozenset({INDDOM})),
    )
}


def resolve_solver(name: str, g: Graph, config: Config) -> str:
    if name == "auto":
        return "exact" if g.n <= config.oracle.brute_force_ceiling else "fpt-nu"
    return name


def run_solver(name: str, g: Graph, kind: ParameterKind, ctx: Optional[SolverContext] = None) -> SolverOutcome:
    ctx = ctx if ctx is not None else SolverContext()
    name = resolve_solver(name, g, ctx.config)
    spec = SOLVERS.get(name)
    if spec is None:
        raise PreconditionError(f"Unknown solver '{name}' (expected one of: {', '.join(SOLVERS)}).")
    if kind not in spec.kinds:
        usable = ", ".join(sorted(k.short for k in spec.kinds))
        raise PreconditionError(f"Solver '{name}' does not compute {kind.short} (it handles: {usable}).")
    logger.debug("running %s for %s on %s", name, kind.short, g.label)
    return spec.run(g, kind, ctx)
