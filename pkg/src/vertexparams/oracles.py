from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Any, Callable, List, Optional, Tuple

from .graph import Graph
from .kinds import Direction, ParameterKind
from .solution import VertexSetSolution


@dataclass
class CallCounter:
    """Monotone call counter shared by an oracle and the decision oracles derived from it."""

    log_calls: bool = True
    calls: int = 0
    call_log: List[Tuple[int, int]] = field(default_factory=list)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def record(self, instance_size: int, answer: int) -> None:
        with self._lock:
            self.calls += 1
            if self.log_calls:
                self.call_log.append((instance_size, int(answer)))

    def snapshot(self) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
        with self._lock:
            return self.calls, tuple(self.call_log)


def _instance_size(instance: Any) -> int:
    return instance.n if isinstance(instance, Graph) else 0


class ValueOracle:
    def __init__(
        self,
        solver: Callable[[Graph], int],
        kind: Optional[ParameterKind] = None,
        counter: Optional[CallCounter] = None,
        log_calls: bool = True,
    ) -> None:
        self.solver = solver
        self.kind = kind
        self.counter = counter if counter is not None else CallCounter(log_calls=log_calls)

    @property
    def calls(self) -> int:
        return self.counter.calls

    @property
    def call_log(self) -> List[Tuple[int, int]]:
        return self.counter.call_log

    def __call__(self, g: Graph) -> int:
        value = int(self.solver(g))
        self.counter.record(_instance_size(g), value)
        return value


class DecisionOracle:
    """Answers f(x) >= k (maximisation) or f(x) <= k (minimisation)."""

    def __init__(
        self,
        predicate: Callable[[Any, int], bool],
        direction: Direction,
        counter: Optional[CallCounter] = None,
        log_calls: bool = True,
    ) -> None:
        self.predicate = predicate
        self.direction = Direction(direction)
        self.counter = counter if counter is not None else CallCounter(log_calls=log_calls)

    @property
    def calls(self) -> int:
        return self.counter.calls

    @property
    def call_log(self) -> List[Tuple[int, int]]:
        return self.counter.call_log

    def __call__(self, instance: Any, k: int) -> bool:
        answer = bool(self.predicate(instance, k))
        self.counter.record(_instance_size(instance), int(answer))
        return answer


def as_decision(vo: ValueOracle, direction: Direction) -> DecisionOracle:
    direction = Direction(direction)

    def predicate(g: Graph, k: int) -> bool:
        value = vo.solver(g)
        return value >= k if direction is Direction.MAX else value <= k

    return DecisionOracle(predicate, direction, counter=vo.counter)


class SolutionOracle:
    """A constructive oracle: returns a whole VertexSetSolution, counted like ValueOracle."""

    def __init__(
        self,
        solver: Callable[[Graph], VertexSetSolution],
        kind: Optional[ParameterKind] = None,
        counter: Optional[CallCounter] = None,
        log_calls: bool = True,
    ) -> None:
        self.solver = solver
        self.kind = kind
        self.counter = counter if counter is not None else CallCounter(log_calls=log_calls)

    @property
    def calls(self) -> int:
        return self.counter.calls

    def __call__(self, g: Graph) -> VertexSetSolution:
        solution = self.solver(g)
        self.counter.record(_instance_size(g), solution.value)
        return solution
