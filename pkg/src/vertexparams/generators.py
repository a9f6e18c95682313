from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, List, Set, Tuple

from .errors import GraphInputError
from .graph import Edge, Graph


@dataclass(frozen=True)
class RandomGraphSpec:
    """G(n, p): pairs u < v are visited in lexicographic order; each is an edge iff rng.random() < p."""

    n: int
    edge_probability: float
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphInputError("Random graphs need n >= 0.")
        if not 0.0 <= self.edge_probability <= 1.0:
            raise GraphInputError(f"Edge probability {self.edge_probability} is outside [0, 1].")

    @property
    def name(self) -> str:
        return f"gnp-n{self.n}-p{self.edge_probability:g}-s{self.seed}"

    def to_dict(self) -> Dict[str, object]:
        return {"n": self.n, "edge_probability": self.edge_probability, "seed": self.seed}


def random_graph(spec: RandomGraphSpec) -> Graph:
    rng = random.Random(spec.seed)
    edges = [pair for pair in combinations(range(spec.n), 2) if rng.random() < spec.edge_probability]
    return Graph(n=spec.n, edges=frozenset(edges), name=spec.name)


def cycle_sparse(n: int, extra_edges: int, seed: int = 0) -> Graph:
    """A random recursive tree plus extra_edges further edges, so ν <= extra_edges."""
    if n < 0 or extra_edges < 0:
        raise GraphInputError("cycle_sparse needs n >= 0 and extra_edges >= 0.")
    rng = random.Random(seed)
    edges: Set[Edge] = {(rng.randrange(v), v) for v in range(1, n)}
    room = n * (n - 1) // 2 - len(edges)
    target = min(extra_edges, room)
    while target > 0:
        u, v = sorted(rng.sample(range(n), 2))
        if (u, v) not in edges:
            edges.add((u, v))
            target -= 1
    return Graph(n=n, edges=frozenset(edges), name=f"sparse-n{n}-c{extra_edges}-s{seed}")


def edgeless_graph(n: int) -> Graph:
    return Graph(n=n, name=f"E{n}")


def path_graph(n: int) -> Graph:
    return Graph(n=n, edges=frozenset((v, v + 1) for v in range(n - 1)), name=f"P{n}")


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("A cycle needs at least 3 vertices.")
    return Graph(n=n, edges=frozenset((v, (v + 1) % n) for v in range(n)), name=f"C{n}")


def complete_graph(n: int) -> Graph:
    return Graph(n=n, edges=frozenset(combinations(range(n), 2)), name=f"K{n}")


def star_graph(leaves: int) -> Graph:
    """K1,leaves with the centre at id 0."""
    return Graph(n=leaves + 1, edges=frozenset((0, v) for v in range(1, leaves + 1)), name=f"K1,{leaves}")


def wheel_graph(rim: int) -> Graph:
    """The cycle C_rim on ids 0..rim-1 with a hub at id rim."""
    base = cycle_graph(rim)
    edges = set(base.edges) | {(v, rim) for v in range(rim)}
    return Graph(n=rim + 1, edges=frozenset(edges), name=f"W{rim}")


def complete_bipartite_graph(a: int, b: int) -> Graph:
    edges = [(u, a + v) for u in range(a) for v in range(b)]
    return Graph(n=a + b, edges=frozenset(edges), name=f"K{a},{b}")


def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9 (i ~ i+2), spokes i ~ i+5."""
    edges: List[Edge] = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
        edges.append((i, i + 5))
    return Graph(n=10, edges=frozenset(edges), name="petersen")


NAMED_GRAPHS: Dict[str, Tuple[int, Callable[..., Graph]]] = {
    "edgeless": (1, edgeless_graph),
    "path": (1, path_graph),
    "cycle": (1, cycle_graph),
    "complete": (1, complete_graph),
    "star": (1, star_graph),
    "wheel": (1, wheel_graph),
    "complete-bipartite": (2, complete_bipartite_graph),
    "petersen": (0, petersen_graph),
}


def named_graph(text: str) -> Graph:
    """Build a catalogue graph from 'name' or 'name:arg[,arg]', e.g. 'cycle:5' or 'complete-bipartite:2,3'."""
    name, _, raw_args = text.strip().partition(":")
    if name not in NAMED_GRAPHS:
        known = ", ".join(NAMED_GRAPHS)
        raise GraphInputError(f"Unknown named graph '{name}' (expected one of: {known}).")
    arity, build = NAMED_GRAPHS[name]
    try:
        args = [int(part) for part in raw_args.split(",") if part.strip()]
    except ValueError:
        raise GraphInputError(f"Arguments of '{text}' must be integers.") from None
    if len(args) != arity:
        raise GraphInputError(f"'{name}' takes {arity} integer argument(s), got {len(args)}.")
    return build(*args)
