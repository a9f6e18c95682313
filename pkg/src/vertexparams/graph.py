from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from .errors import GraphInputError, PreconditionError

Edge = Tuple[int, int]


def _normalize_edge(u: int, v: int, n: int) -> Edge:
    if u == v:
        raise GraphInputError(f"Self-loop at vertex {u} is not allowed.")
    if not (0 <= u < n and 0 <= v < n):
        raise GraphInputError(f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}.")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on the dense vertex ids 0..n-1."""

    n: int
    edges: FrozenSet[Edge] = frozenset()
    name: str = ""

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphInputError("Vertex count must be non-negative.")
        normalized = frozenset(_normalize_edge(int(u), int(v), self.n) for u, v in self.edges)
        object.__setattr__(self, "edges", normalized)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], name: str = "") -> "Graph":
        return cls(n=n, edges=frozenset(tuple(edge) for edge in edges), name=name)  # type: ignore[arg-type]

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        neighbors: List[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            neighbors[u].add(v)
            neighbors[v].add(u)
        return tuple(frozenset(group) for group in neighbors)

    @cached_property
    def masks(self) -> Tuple[int, ...]:
        """Open neighbourhoods as bitmasks over vertex ids."""
        result = [0] * self.n
        for u, v in self.edges:
            result[u] |= 1 << v
            result[v] |= 1 << u
        return tuple(result)

    @cached_property
    def closed_masks(self) -> Tuple[int, ...]:
        return tuple(mask | (1 << v) for v, mask in enumerate(self.masks))

    @cached_property
    def sorted_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def digest(self) -> str:
        payload = f"{self.n};" + ";".join(f"{u},{v}" for u, v in self.sorted_edges)
        return hashlib.sha1(payload.encode("ascii")).hexdigest()

    @property
    def label(self) -> str:
        return self.name or f"graph-{self.digest[:12]}"

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v]

    def closed_neighbors(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        # Δ of the empty graph is 0.
        return max((len(group) for group in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def check_vertices(self, vertices: Iterable[int]) -> FrozenSet[int]:
        chosen = frozenset(int(v) for v in vertices)
        for v in chosen:
            if not 0 <= v < self.n:
                raise GraphInputError(f"Vertex {v} is outside 0..{self.n - 1}.")
        return chosen

    def renamed(self, name: str) -> "Graph":
        return Graph(n=self.n, edges=self.edges, name=name)

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.label,
            "n": self.n,
            "m": self.m,
            "edges": [list(edge) for edge in self.sorted_edges],
        }


def complement(g: Graph) -> Graph:
    edges = frozenset(
        (u, v) for u in range(g.n) for v in range(u + 1, g.n) if v not in g.adjacency[u]
    )
    return Graph(n=g.n, edges=edges, name=f"co-{g.label}" if g.name else "")


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """Return G[keep] relabelled to 0..|keep|-1 together with the old-id -> new-id map."""
    kept = sorted(g.check_vertices(keep))
    mapping = {old: new for new, old in enumerate(kept)}
    edges = frozenset(
        (mapping[u], mapping[v]) for u, v in g.edges if u in mapping and v in mapping
    )
    return Graph(n=len(kept), edges=edges), mapping


def remove_vertices(g: Graph, removed: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    gone = g.check_vertices(removed)
    return induced_subgraph(g, (v for v in g.vertices if v not in gone))


def disjoint_union(*graphs: Graph) -> Tuple[Graph, List[int]]:
    """Place the graphs side by side; returns the union and each part's id offset."""
    offsets: List[int] = []
    edges: List[Edge] = []
    total = 0
    for part in graphs:
        offsets.append(total)
        edges.extend((u + total, v + total) for u, v in part.edges)
        total += part.n
    return Graph(n=total, edges=frozenset(edges)), offsets


def to_networkx(g: Graph, vertices: Optional[Iterable[int]] = None) -> nx.Graph:
    """G[vertices] as a networkx graph on the original ids."""
    allowed = set(g.vertices) if vertices is None else set(vertices)
    out = nx.Graph()
    out.add_nodes_from(sorted(allowed))
    out.add_edges_from((u, v) for u, v in sorted(g.edges) if u in allowed and v in allowed)
    return out


def to_multigraph(g: Graph, vertices: Optional[Iterable[int]] = None) -> nx.MultiGraph:
    """G[vertices] as a networkx multigraph, the working form of the FVS search."""
    return nx.MultiGraph(to_networkx(g, vertices))


def find_cycle_vertex(g: Graph, vertices: Optional[Iterable[int]] = None) -> Optional[int]:
    """Return the smallest vertex of some cycle of G[vertices], or None when it is a forest."""
    try:
        cycle = nx.find_cycle(to_networkx(g, vertices))
    except nx.NetworkXNoCycle:
        return None
    return min(u for u, _ in cycle)


def is_forest(g: Graph, vertices: Optional[Iterable[int]] = None) -> bool:
    sub = to_networkx(g, vertices)
    return sub.number_of_nodes() == 0 or nx.is_forest(sub)


@dataclass(frozen=True)
class MergeStep:
    """One T(survivor) <- T(absorbed) operation: join the two roots by an edge."""

    survivor: int
    absorbed: int


@dataclass(frozen=True)
class TreePlan:
    root: int
    vertices: Tuple[int, ...]
    steps: Tuple[MergeStep, ...] = ()

    @cached_property
    def children(self) -> Mapping[int, Tuple[int, ...]]:
        result: Dict[int, List[int]] = {v: [] for v in self.vertices}
        for step in self.steps:
            result[step.survivor].append(step.absorbed)
        return {v: tuple(group) for v, group in result.items()}


@dataclass(frozen=True)
class RootedForestPlan:
    trees: Tuple[TreePlan, ...] = field(default_factory=tuple)

    @property
    def roots(self) -> Tuple[int, ...]:
        return tuple(tree.root for tree in self.trees)

    def replay(self) -> FrozenSet[Edge]:
        """Rebuild the forest's edge set from singletons, validating every merge."""
        current_root: Dict[int, int] = {}
        edges: set = set()
        absorbed: set = set()
        for tree in self.trees:
            for v in tree.vertices:
                if v in current_root:
                    raise PreconditionError(f"Vertex {v} appears in two trees of the plan.")
                current_root[v] = v
        members: Dict[int, List[int]] = {v: [v] for v in current_root}
        for tree in self.trees:
            for step in tree.steps:
                r1, r2 = step.survivor, step.absorbed
                if r2 in absorbed or r2 == tree.root:
                    raise PreconditionError(f"Vertex {r2} is absorbed illegally.")
                if current_root.get(r1) != r1 or current_root.get(r2) != r2:
                    raise PreconditionError(f"Merge ({r1} <- {r2}) does not join two current roots.")
                absorbed.add(r2)
                edges.add((r1, r2) if r1 < r2 else (r2, r1))
                for v in members.pop(r2):
                    current_root[v] = r1
                    members[r1].append(v)
        return frozenset(edges)


def decompose_forest(g: Graph, vertices: Optional[Iterable[int]] = None) -> RootedForestPlan:
    """Decompose the forest G[vertices] into <- merges.

    Roots are the lowest id of each component; children are absorbed depth-first in
    ascending id order, so every absorbed subtree is complete before its merge.
    """
    allowed = set(g.vertices) if vertices is None else set(g.check_vertices(vertices))
    cycle_vertex = find_cycle_vertex(g, allowed)
    if cycle_vertex is not None:
        raise PreconditionError(f"Graph is not a forest: vertex {cycle_vertex} lies on a cycle.")

    seen: set = set()
    trees: List[TreePlan] = []
    for root in sorted(allowed):
        if root in seen:
            continue
        seen.add(root)
        order: List[int] = [root]
        steps: List[MergeStep] = []
        # (vertex, parent, iterator over children) emulating recursion
        stack: List[Tuple[int, Optional[int], List[int]]] = []
        kids = sorted(w for w in g.adjacency[root] if w in allowed)
        stack.append((root, None, kids))
        while stack:
            v, parent, pending = stack[-1]
            if pending:
                child = pending.pop(0)
                seen.add(child)
                order.append(child)
                grand = sorted(w for w in g.adjacency[child] if w in allowed and w != v)
                stack.append((child, v, grand))
                continue
            stack.pop()
            if parent is not None:
                steps.append(MergeStep(survivor=parent, absorbed=v))
        trees.append(TreePlan(root=root, vertices=tuple(order), steps=tuple(steps)))
    return RootedForestPlan(trees=tuple(trees))
