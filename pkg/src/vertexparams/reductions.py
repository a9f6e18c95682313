"""Oracle reductions: value from decision, constructive from value.

Every reduction returns a ReductionTrace that records the oracle calls it made
and the bound it promises for them.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Tuple

from .errors import ContractViolation, GraphInputError
from .gadgets import clique_blowup_unbounded, pendant_matching
from .graph import Graph, complement, induced_subgraph, is_forest
from .kinds import Direction, ParameterKind
from .oracles import DecisionOracle, SolutionOracle, ValueOracle
from .solution import VertexSetSolution, certify, is_feasible

logger = logging.getLogger(__name__)


@dataclass
class ReductionTrace:
    reduction: str
    call_bound: int = 0
    oracle_calls: int = 0
    per_call_instance_sizes: List[int] = field(default_factory=list)
    size_bound: Optional[int] = None
    result: Any = None
    steps: List[Dict[str, object]] = field(default_factory=list)

    @property
    def within_bounds(self) -> bool:
        if self.oracle_calls > self.call_bound:
            return False
        return self.size_bound is None or all(size <= self.size_bound for size in self.per_call_instance_sizes)

    def ask(self, oracle: Callable[[Graph], Any], instance: Graph) -> Any:
        answer = oracle(instance)
        self.oracle_calls += 1
        self.per_call_instance_sizes.append(instance.n)
        return answer

    def close(self, result: Any) -> None:
        self.result = result
        if not self.within_bounds:
            raise ContractViolation(
                f"{self.reduction} made {self.oracle_calls} calls (bound {self.call_bound}) "
                f"on sizes up to {max(self.per_call_instance_sizes, default=0)} (bound {self.size_bound})"
            )

    def to_dict(self) -> Dict[str, object]:
        result = self.result.to_dict() if hasattr(self.result, "to_dict") else self.result
        return {
            "reduction": self.reduction,
            "oracle_calls": self.oracle_calls,
            "call_bound": self.call_bound,
            "per_call_instance_sizes": list(self.per_call_instance_sizes),
            "size_bound": self.size_bound,
            "result": result,
            "steps": list(self.steps),
        }


def trivial_feasible_value(g: Graph, kind: ParameterKind) -> int:
    """The value of a solution found without search: one vertex for α and ω, all of V otherwise."""
    if g.n == 0:
        return 0
    return 1 if kind.is_max else g.n


def decision_call_bound(range_bound: int) -> int:
    return 2 * math.ceil(math.log2(max(range_bound, 1))) + 4


def value_from_decision(
    d: DecisionOracle,
    direction: Direction,
    feasible_start: int,
    range_bound: int,
    instance: Any = None,
) -> Tuple[int, ReductionTrace]:
    """Exact optimum from a threshold oracle: doubling away from λ, then binary search."""
    direction = Direction(direction)
    spread = max(range_bound, 1)
    sign = 1 if direction is Direction.MAX else -1
    trace = ReductionTrace(reduction="value-from-decision", call_bound=decision_call_bound(spread))

    def query(offset: int) -> bool:
        threshold = feasible_start + sign * offset
        answer = d(instance, threshold)
        trace.oracle_calls += 1
        trace.per_call_instance_sizes.append(instance.n if isinstance(instance, Graph) else 0)
        trace.steps.append({"threshold": threshold, "answer": answer})
        return answer

    # yes at offset lo, no at offset hi
    lo, hi = 0, None
    k = 1
    while hi is None:
        offset = min(2 ** k, spread + 1)
        if query(offset):
            if offset > spread:
                raise ContractViolation(f"decision oracle says yes beyond the range bound {spread} from {feasible_start}")
            lo = offset
            k += 1
        else:
            hi = offset
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if query(mid):
            lo = mid
        else:
            hi = mid
    value = feasible_start + sign * lo
    logger.debug("value_from_decision: %s value %d after %d calls", direction.value, value, trace.oracle_calls)
    trace.close(value)
    return value, trace


def decide_value(g: Graph, d: DecisionOracle, kind: ParameterKind) -> Tuple[int, ReductionTrace]:
    """value_from_decision with λ from trivial_feasible_value and range n."""
    return value_from_decision(d, kind.direction, trivial_feasible_value(g, kind), g.n, instance=g)


class HereditaryProperty(str, Enum):
    INDEPENDENT_SET = "alpha"
    CLIQUE = "omega"
    INDUCED_FOREST = "induced-forest"

    def holds(self, g: Graph, vertices: Tuple[int, ...]) -> bool:
        if self is HereditaryProperty.INDEPENDENT_SET:
            return is_feasible(g, ParameterKind.MAX_INDEPENDENT_SET, vertices)
        if self is HereditaryProperty.CLIQUE:
            return is_feasible(g, ParameterKind.MAX_CLIQUE, vertices)
        return is_forest(g, vertices)


@dataclass(frozen=True)
class HereditaryResult:
    prop: HereditaryProperty
    vertices: Tuple[int, ...]
    value: int
    certified: bool

    def to_dict(self) -> Dict[str, object]:
        return {
            "property": self.prop.value,
            "value": self.value,
            "witness": list(self.vertices),
            "certified": self.certified,
        }


def constructive_hereditary(
    g: Graph, oracle: ValueOracle, prop: HereditaryProperty
) -> Tuple[HereditaryResult, ReductionTrace]:
    """Delete each vertex whose removal keeps the optimum; the survivors form an optimal set."""
    prop = HereditaryProperty(prop)
    trace = ReductionTrace(reduction=f"hereditary-{prop.value}", call_bound=g.n + 1, size_bound=g.n)
    remaining = list(g.vertices)
    target = trace.ask(oracle, g)
    for u in g.vertices:
        if len(remaining) == target:
            break
        candidate = [v for v in remaining if v != u]
        value = trace.ask(oracle, induced_subgraph(g, candidate)[0])
        if value == target:
            remaining = candidate
        elif value != target - 1:
            raise ContractViolation(
                f"{prop.value} oracle went from {target} to {value} after deleting vertex {u}; not hereditary"
            )
        trace.steps.append({"vertex": u, "value": value, "deleted": value == target})
    kept = tuple(remaining)
    if len(kept) != target:
        raise ContractViolation(f"{prop.value} oracle promised {target} but {len(kept)} vertices survived")
    result = HereditaryResult(prop=prop, vertices=kept, value=target, certified=prop.holds(g, kept))
    if not result.certified:
        raise ContractViolation(f"surviving vertices do not satisfy {prop.value}; the oracle is not exact")
    trace.close(result)
    return result, trace


HEREDITARY_FOR_KIND: Dict[ParameterKind, Tuple[HereditaryProperty, bool]] = {
    ParameterKind.MAX_INDEPENDENT_SET: (HereditaryProperty.INDEPENDENT_SET, False),
    ParameterKind.MAX_CLIQUE: (HereditaryProperty.CLIQUE, False),
    ParameterKind.MIN_VERTEX_COVER: (HereditaryProperty.INDEPENDENT_SET, True),
    ParameterKind.MIN_FEEDBACK_VERTEX_SET: (HereditaryProperty.INDUCED_FOREST, True),
}


def hereditary_solution(
    g: Graph, kind: ParameterKind, oracle: ValueOracle
) -> Tuple[VertexSetSolution, ReductionTrace]:
    """α and ω directly; τ and ν as V minus the independent set or induced forest."""
    if kind not in HEREDITARY_FOR_KIND:
        raise GraphInputError(f"{kind.short} has no hereditary self-reduction.")
    prop, complemented = HEREDITARY_FOR_KIND[kind]
    result, trace = constructive_hereditary(g, oracle, prop)
    kept = set(result.vertices)
    witness = [v for v in g.vertices if v not in kept] if complemented else list(result.vertices)
    return certify(g, kind, witness, {"property": prop.value}), trace


def constructive_gamma(g: Graph, oracle: ValueOracle) -> Tuple[VertexSetSolution, ReductionTrace]:
    """Grow V' one vertex at a time, keeping γ(G_{V'}) = γ(G), until V' dominates G."""
    kind = ParameterKind.MIN_DOMINATING_SET
    trace = ReductionTrace(reduction="constructive-gamma", size_bound=2 * g.n)
    target = trace.ask(oracle, g)
    trace.call_bound = g.n * target + 1
    committed: List[int] = []
    covered: set = set()
    while len(covered) < g.n:
        for w in g.vertices:
            if w in committed:
                continue
            probe = committed + [w]
            instance = pendant_matching(g, probe)
            value = trace.ask(oracle, instance)
            trace.steps.append({"probe": sorted(probe), "gamma": value})
            if not target <= value <= target + 1:
                raise ContractViolation(f"γ(G_V') = {value} lies outside [{target}, {target + 1}]")
            if value == target:
                committed.append(w)
                covered |= g.closed_neighbors(w)
                break
        else:
            raise ContractViolation(f"no vertex extends {sorted(committed)}; the γ oracle is not exact")
    solution = certify(g, kind, committed)
    if not solution.certified or solution.value != target:
        raise ContractViolation(f"constructed set {solution.witness} is not a minimum dominating set")
    logger.debug("constructive_gamma on %s: γ=%d in %d calls", g.label, target, trace.oracle_calls)
    trace.close(solution)
    return solution, trace


def constructive_inddom(
    g: Graph,
    oracle: ValueOracle,
    alpha: Optional[Callable[[Graph], int]] = None,
) -> Tuple[VertexSetSolution, ReductionTrace]:
    """Commit a vertex u with i(G - N[u]) = i(G) - 1 and repeat on G - N[u].

    alpha, when given, is used to check α(G') <= α(G) on every intermediate instance.
    """
    kind = ParameterKind.MIN_INDEPENDENT_DOMINATING_SET
    trace = ReductionTrace(reduction="constructive-inddom", size_bound=g.n)
    target = trace.ask(oracle, g)
    trace.call_bound = g.n * target + 1
    alpha_bound = alpha(g) if alpha is not None else None
    remaining = list(g.vertices)
    needed = target
    committed: List[int] = []
    while remaining:
        alive = set(remaining)
        for u in remaining:
            rest = [v for v in remaining if v not in g.closed_neighbors(u)]
            instance = induced_subgraph(g, rest)[0]
            value = trace.ask(oracle, instance)
            step: Dict[str, object] = {"vertex": u, "i": value}
            if alpha_bound is not None:
                step["alpha"] = alpha(instance)
                if step["alpha"] > alpha_bound:
                    raise ContractViolation(f"α rose to {step['alpha']} above {alpha_bound} after removing N[{u}]")
            trace.steps.append(step)
            if value == needed - 1:
                committed.append(u)
                remaining = rest
                needed -= 1
                break
        else:
            raise ContractViolation(
                f"no vertex of {sorted(alive)} lowers i from {needed}; the i oracle is not exact"
            )
    solution = certify(g, kind, committed)
    if not solution.certified or solution.value != target:
        raise ContractViolation(f"constructed set {solution.witness} is not a minimum independent dominating set")
    trace.close(solution)
    return solution, trace


def inddom_via_clique_blowup(g: Graph, oracle: SolutionOracle) -> Tuple[VertexSetSolution, ReductionTrace]:
    """Ask for i-witnesses of G_1, G_2, ... until one misses a whole copy, then project it onto G.

    That happens first at k = i(G)+1. For an edgeless G this is k = n+1, one past
    the usual range of clique_blowup.
    """
    kind = ParameterKind.MIN_INDEPENDENT_DOMINATING_SET
    trace = ReductionTrace(reduction="inddom-clique-blowup", size_bound=g.n * (g.n + 1))
    if g.n == 0:
        trace.call_bound = 0
        solution = certify(g, kind, ())
        trace.close(solution)
        return solution, trace
    for k in range(1, g.n + 2):
        instance = clique_blowup_unbounded(g, k)
        found = trace.ask(oracle, instance)
        copies = {v // g.n for v in found.witness}
        trace.steps.append({"k": k, "i": found.value, "copies_hit": len(copies)})
        if len(copies) < k:
            solution = certify(g, kind, sorted({v % g.n for v in found.witness}), {"k": k})
            if not solution.certified:
                raise ContractViolation("projection of the blowup witness is not independent dominating")
            trace.call_bound = solution.value + 1
            trace.close(solution)
            return solution, trace
    raise ContractViolation("every blowup witness hit every copy; the i oracle is not exact")


_DUAL_KIND = {
    ParameterKind.MAX_INDEPENDENT_SET: ParameterKind.MAX_CLIQUE,
    ParameterKind.MAX_CLIQUE: ParameterKind.MAX_INDEPENDENT_SET,
}


def value_via_complement(
    g: Graph, oracle: SolutionOracle, kind: ParameterKind
) -> Tuple[VertexSetSolution, ReductionTrace]:
    """α(G) = ω(co-G) and ω(G) = α(co-G); the witness carries over unchanged."""
    if kind not in _DUAL_KIND:
        raise GraphInputError(f"{kind.short} has no complement dual; use alpha or omega.")
    trace = ReductionTrace(reduction="complement", call_bound=1, size_bound=g.n)
    dual = trace.ask(oracle, complement(g))
    if dual.kind is not _DUAL_KIND[kind]:
        raise ContractViolation(f"complement oracle answered {dual.kind.short}, expected {_DUAL_KIND[kind].short}")
    solution = certify(g, kind, dual.witness, {"dual": dual.kind.short})
    trace.close(solution)
    return solution, trace
