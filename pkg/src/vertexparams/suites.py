"""Seeded property suites run by `vertexparams verify`.

Each trial draws its own random.Random from (suite, seed, trial index), so a
trial's graph does not depend on worker count or on the other trials.
"""
from __future__ import annotations

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import networkx as nx

from .config import Config
from .errors import VertexParamsError
from .evaluation import parameter_inequalities
from .exact import exact_solve
from .fpt import chromatic_fpt_nu
from .fvs import min_fvs
from .gadgets import pendant_matching, verify_identity
from .generators import RandomGraphSpec, cycle_sparse, random_graph
from .graph import Graph, complement, decompose_forest, to_networkx
from .kinds import ALL_KINDS, ParameterKind
from .oracles import ValueOracle, as_decision
from .reductions import (
    HereditaryProperty,
    constructive_gamma,
    constructive_hereditary,
    constructive_inddom,
    decide_value,
    hereditary_solution,
)
from .solution import verify_witness
from .solvers import FPT_SOLVERS

logger = logging.getLogger(__name__)

ALPHA = ParameterKind.MAX_INDEPENDENT_SET
TAU = ParameterKind.MIN_VERTEX_COVER
OMEGA = ParameterKind.MAX_CLIQUE
CHI = ParameterKind.CHROMATIC_NUMBER
GAMMA = ParameterKind.MIN_DOMINATING_SET
INDDOM = ParameterKind.MIN_INDEPENDENT_DOMINATING_SET
NU = ParameterKind.MIN_FEEDBACK_VERTEX_SET

FPT_CHECKED = (OMEGA, ALPHA, TAU, CHI, GAMMA, INDDOM)


@dataclass
class TrialResult:
    trial: int
    graph: str
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class SuiteResult:
    suite: str
    trials: List[TrialResult] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for trial in self.trials if trial.passed)

    @property
    def failed(self) -> int:
        return len(self.trials) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> Dict[str, object]:
        return {
            "suite": self.suite,
            "trials": len(self.trials),
            "passed": self.passed,
            "failed": self.failed,
            "failures": [
                {"trial": trial.trial, "graph": trial.graph, "messages": trial.failures}
                for trial in self.trials
                if not trial.passed
            ],
        }


def trial_rng(suite: str, seed: int, trial: int) -> random.Random:
    return random.Random(f"{suite}/{seed}/{trial}")


def _random_instance(rng: random.Random, config: Config, min_n: int, max_n: int) -> Graph:
    verify = config.verify
    n = rng.randint(min(min_n, max_n), max_n)
    p = verify.densities[rng.randrange(len(verify.densities))]
    return random_graph(RandomGraphSpec(n=n, edge_probability=p, seed=rng.getrandbits(63)))


def _exact(g: Graph, kind: ParameterKind, config: Config):
    return exact_solve(g, kind, ceiling=config.oracle.brute_force_ceiling)


def _fpt_vs_oracle(rng: random.Random, config: Config) -> Tuple[Graph, List[str]]:
    g = _random_instance(rng, config, config.verify.min_n, config.verify.max_n)
    failures: List[str] = []
    for kind in FPT_CHECKED:
        expected = _exact(g, kind, config).value
        found = FPT_SOLVERS[kind](g)
        if found.value != expected:
            failures.append(f"{kind.short}: fpt {found.value} != exact {expected}")
        if not found.certified or not verify_witness(g, found):
            failures.append(f"{kind.short}: witness {list(found.witness)} not certified")
    return g, failures


def _fvs_vs_oracle(rng: random.Random, config: Config) -> Tuple[Graph, List[str]]:
    g = _random_instance(rng, config, config.verify.min_n, config.verify.max_n)
    failures: List[str] = []
    result = min_fvs(g)
    expected = _exact(g, NU, config).value
    if result.size != expected:
        failures.append(f"nu: min_fvs {result.size} != exact {expected}")
    rest = to_networkx(g, (v for v in g.vertices if v not in set(result.fvs)))
    if not result.forest_check or (rest.number_of_nodes() and not nx.is_forest(rest)):
        failures.append(f"nu: removing {list(result.fvs)} leaves a cycle")
    return g, failures


def _gadget_identities(rng: random.Random, config: Config) -> Tuple[Graph, List[str]]:
    g = _random_instance(rng, config, 1, config.verify.gadget_max_n)
    ceiling = config.oracle.brute_force_ceiling
    n = g.n
    arguments: Dict[str, Dict[str, object]] = {
        "add-dominating-vertex": {},
        "double-copy-gadget": {},
        "edge-product": {},
        "pendant-matching": {"vprime": sorted(rng.sample(range(n), rng.randint(0, n)))},
        "clique-blowup": {"k": rng.randint(1, max(1, min(n, ceiling // n)))},
        "prune-monochromatic-edges": {"coloring": [rng.randint(1, max(1, n // 2)) for _ in range(n)]},
    }
    failures: List[str] = []
    for name, extra in arguments.items():
        report = verify_identity(name, g, ceiling=ceiling, **extra)
        failures.extend(
            f"{name}: {text} failed ({relation.lhs} vs {relation.rhs})"
            for text, relation in report.measured.items()
            if not relation.holds
        )
    return g, failures


def _reduction_call_bounds(rng: random.Random, config: Config) -> Tuple[Graph, List[str]]:
    g = _random_instance(rng, config, 1, config.verify.reduction_max_n)
    failures: List[str] = []
    exact = {kind: _exact(g, kind, config) for kind in ALL_KINDS}

    def oracle(kind: ParameterKind) -> ValueOracle:
        return ValueOracle(lambda h: _exact(h, kind, config).value, kind=kind)

    for kind in ALL_KINDS:
        value, trace = decide_value(g, as_decision(oracle(kind), kind.direction), kind)
        if value != exact[kind].value or not trace.within_bounds:
            failures.append(f"decision {kind.short}: {value} in {trace.oracle_calls}/{trace.call_bound} calls")

    forest_oracle = ValueOracle(lambda h: h.n - _exact(h, NU, config).value)
    result, trace = constructive_hereditary(g, forest_oracle, HereditaryProperty.INDUCED_FOREST)
    if result.value != g.n - exact[NU].value or not trace.within_bounds:
        failures.append(f"hereditary induced-forest: {result.value} in {trace.oracle_calls} calls")
    for kind in (ALPHA, OMEGA, TAU):
        prop = HereditaryProperty.CLIQUE if kind is OMEGA else HereditaryProperty.INDEPENDENT_SET
        source = OMEGA if kind is OMEGA else ALPHA
        solution, trace = hereditary_solution(g, kind, oracle(source))
        if solution.value != exact[kind].value or not solution.certified or not trace.within_bounds:
            failures.append(f"hereditary {prop.value} for {kind.short}: {solution.value} in {trace.oracle_calls} calls")

    solution, trace = constructive_gamma(g, oracle(GAMMA))
    if solution.value != exact[GAMMA].value or not trace.within_bounds:
        failures.append(f"constructive gamma: {solution.value} in {trace.oracle_calls}/{trace.call_bound} calls")
    gamma, inddom, alpha = exact[GAMMA].value, exact[INDDOM].value, exact[ALPHA].value
    for step in trace.steps:
        probe = pendant_matching(g, step["probe"])  # type: ignore[arg-type]
        if probe.n > 2 * g.n or step["gamma"] > gamma + 1:  # type: ignore[operator]
            failures.append(f"pendant instance {step['probe']} breaks γ <= γ(G)+1 or size <= 2n")
        if probe.n > config.oracle.brute_force_ceiling:
            continue
        if _exact(probe, INDDOM, config).value > 2 * inddom or _exact(probe, ALPHA, config).value > 2 * alpha:
            failures.append(f"pendant instance {step['probe']} breaks i <= 2i(G) or α <= 2α(G)")

    solution, trace = constructive_inddom(g, oracle(INDDOM), alpha=lambda h: _exact(h, ALPHA, config).value)
    if solution.value != inddom or not trace.within_bounds:
        failures.append(f"constructive inddom: {solution.value} in {trace.oracle_calls}/{trace.call_bound} calls")
    return g, failures


def _inequality_chain(rng: random.Random, config: Config) -> Tuple[Graph, List[str]]:
    g = _random_instance(rng, config, 0, min(config.verify.max_n, 10))
    values = {kind: _exact(g, kind, config).value for kind in ALL_KINDS}
    failures = [f"violated {relation}" for relation in parameter_inequalities(values, g.n, g.max_degree)]
    if values[ALPHA] != _exact(complement(g), OMEGA, config).value:
        failures.append("α(G) != ω(co-G)")
    if values[TAU] != g.n - values[ALPHA]:
        failures.append("τ != n - α")
    return g, failures


def _chi_window(rng: random.Random, config: Config) -> Tuple[Graph, List[str]]:
    g = _random_instance(rng, config, config.verify.min_n, config.verify.max_n)
    found = chromatic_fpt_nu(g)
    k, chi_fstar = found.value, int(found.details.get("chi_fstar", 0))
    failures: List[str] = []
    if not chi_fstar <= k <= chi_fstar + 2:
        failures.append(f"χ={k} outside [χ(F*), χ(F*)+2] = [{chi_fstar}, {chi_fstar + 2}]")
    omega = _exact(g, OMEGA, config).value
    if g.n and not omega <= k <= g.max_degree + 1:
        failures.append(f"χ={k} outside [ω, Δ+1] = [{omega}, {g.max_degree + 1}]")
    if k != _exact(g, CHI, config).value:
        failures.append(f"χ={k} differs from the exact value")
    return g, failures


def _forest_decomposition(rng: random.Random, config: Config) -> Tuple[Graph, List[str]]:
    n = rng.randint(1, 12)
    tree = cycle_sparse(n, 0, seed=rng.getrandbits(63))
    kept = frozenset(edge for edge in tree.edges if rng.random() < 0.8)
    g = Graph(n=n, edges=kept, name=f"forest-{tree.name}")
    plan = decompose_forest(g)
    failures: List[str] = []
    if plan.replay() != g.edges:
        failures.append("replay differs from the forest's edge set")
    for tree_plan in plan.trees:
        if tree_plan.root != min(tree_plan.vertices):
            failures.append(f"root {tree_plan.root} is not the lowest id of its tree")
    return g, failures


SUITES: Dict[str, Callable[[random.Random, Config], Tuple[Graph, List[str]]]] = {
    "fpt-vs-oracle": _fpt_vs_oracle,
    "fvs-vs-oracle": _fvs_vs_oracle,
    "gadget-identities": _gadget_identities,
    "reduction-call-bounds": _reduction_call_bounds,
    "inequality-chain": _inequality_chain,
    "chi-window": _chi_window,
    "forest-decomposition": _forest_decomposition,
}


def run_trial(suite: str, trial: int, config: Config) -> TrialResult:
    rng = trial_rng(suite, config.verify.seed, trial)
    label = f"{suite}#{trial}"
    try:
        g, failures = SUITES[suite](rng, config)
        label = g.label
    except VertexParamsError as exc:
        failures = [f"{exc.code}: {exc}"]
    result = TrialResult(trial=trial, graph=label, failures=failures)
    if failures:
        logger.warning("%s trial %d on %s failed: %s", suite, trial, label, "; ".join(failures))
    return result


def _run_trial_args(args: Tuple[str, int, Config]) -> TrialResult:
    return run_trial(*args)


def run_suite(suite: str, config: Optional[Config] = None, trials: Optional[int] = None) -> SuiteResult:
    config = config if config is not None else Config()
    if suite not in SUITES:
        raise ValueError(f"Unknown suite '{suite}' (expected one of: {', '.join(SUITES)}, all).")
    count = config.verify.trials if trials is None else trials
    jobs = [(suite, trial, config) for trial in range(count)]
    if config.verify.workers > 1 and count > 1:
        with ProcessPoolExecutor(max_workers=config.verify.workers) as pool:
            results = list(pool.map(_run_trial_args, jobs))
    else:
        results = [_run_trial_args(job) for job in jobs]
    outcome = SuiteResult(suite=suite, trials=sorted(results, key=lambda r: r.trial))
    logger.info("suite %s: %d/%d trials passed", suite, outcome.passed, len(outcome.trials))
    return outcome


def run_suites(names: Sequence[str], config: Optional[Config] = None, trials: Optional[int] = None) -> List[SuiteResult]:
    chosen = list(SUITES) if "all" in names else list(names)
    return [run_suite(name, config, trials) for name in chosen]
