"""Graph constructions with a proved relation between input and output parameters.

Product and blowup gadgets lay out vertex (v, copy i) at id i*n + v.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import GraphInputError, PreconditionError
from .exact import exact_solve, min_dominating_containing
from .graph import Edge, Graph
from .kinds import ParameterKind
from .solution import is_feasible

logger = logging.getLogger(__name__)

Coloring = Union[Mapping[int, int], Sequence[int]]

ALPHA = ParameterKind.MAX_INDEPENDENT_SET
TAU = ParameterKind.MIN_VERTEX_COVER
OMEGA = ParameterKind.MAX_CLIQUE
CHI = ParameterKind.CHROMATIC_NUMBER
GAMMA = ParameterKind.MIN_DOMINATING_SET
INDDOM = ParameterKind.MIN_INDEPENDENT_DOMINATING_SET
NU = ParameterKind.MIN_FEEDBACK_VERTEX_SET


def _require_non_empty(g: Graph, gadget: str) -> None:
    if g.n == 0:
        raise PreconditionError(f"{gadget} needs a non-empty graph.")


def _derived_name(g: Graph, suffix: str) -> str:
    return f"{g.name}:{suffix}" if g.name else ""


def add_dominating_vertex(g: Graph) -> Graph:
    """G plus one new vertex (id n) adjacent to every vertex of G."""
    _require_non_empty(g, "add_dominating_vertex")
    apex = g.n
    edges = set(g.edges) | {(v, apex) for v in g.vertices}
    return Graph(n=g.n + 1, edges=frozenset(edges), name=_derived_name(g, "dom"))


def double_copy_gadget(g: Graph) -> Graph:
    """Copies G_0 (ids 0..n-1) and G_1 (ids n..2n-1), apex u=2n over G_0, apex v=2n+1 over G_1, and the edge uv."""
    _require_non_empty(g, "double_copy_gadget")
    n = g.n
    u, v = 2 * n, 2 * n + 1
    edges: List[Edge] = []
    for offset in (0, n):
        edges.extend((a + offset, b + offset) for a, b in g.edges)
    edges.extend((w, u) for w in range(n))
    edges.extend((n + w, v) for w in range(n))
    edges.append((u, v))
    return Graph(n=2 * n + 2, edges=frozenset(edges), name=_derived_name(g, "double"))


def pendant_matching(g: Graph, vprime: Iterable[int]) -> Graph:
    """G_{V'}: a new stable set, matched one-to-one onto V' in ascending order (ids n, n+1, ...)."""
    chosen = sorted(g.check_vertices(vprime))
    edges = set(g.edges) | {(v, g.n + index) for index, v in enumerate(chosen)}
    return Graph(n=g.n + len(chosen), edges=frozenset(edges), name=_derived_name(g, "pendant"))


def edge_product(g: Graph) -> Graph:
    """Each vertex blown up to an adjacent pair; (u,i)~(v,j) for all copies whenever uv is an edge."""
    n = g.n
    edges: List[Edge] = [(v, n + v) for v in g.vertices]
    for a, b in g.edges:
        edges.extend(((a, b), (n + a, n + b), (a, n + b), (n + a, b)))
    return Graph(n=2 * n, edges=frozenset(edges), name=_derived_name(g, "product"))


def clique_blowup_unbounded(g: Graph, k: int) -> Graph:
    n = g.n
    edges: List[Edge] = []
    for i in range(k):
        edges.extend((i * n + a, i * n + b) for a, b in combinations(range(n), 2))
    for i, j in combinations(range(k), 2):
        for u in g.vertices:
            for v in g.closed_neighbors(u):
                edges.append((i * n + u, j * n + v))
    return Graph(n=k * n, edges=frozenset(edges), name=_derived_name(g, f"blowup{k}"))


def clique_blowup(g: Graph, k: int) -> Graph:
    """G_k: k copies of V, each a clique, with (u,i)~(v,j) for i != j whenever v is in N[u]."""
    if not 1 <= k <= g.n:
        raise GraphInputError(f"clique_blowup needs 1 <= k <= n, got k={k} with n={g.n}.")
    return clique_blowup_unbounded(g, k)


def _coloring_map(g: Graph, coloring: Coloring) -> Dict[int, int]:
    if isinstance(coloring, Mapping):
        colors = {int(v): c for v, c in coloring.items()}
    else:
        colors = {v: c for v, c in enumerate(coloring)}
    for v in g.vertices:
        color = colors.get(v)
        if color is None:
            raise GraphInputError(f"Vertex {v} has no colour.")
        if not isinstance(color, int) or color < 1:
            raise GraphInputError(f"Vertex {v} has colour {color!r}; colours are integers from 1.")
    return {v: colors[v] for v in g.vertices}


def prune_monochromatic_edges(g: Graph, coloring: Coloring) -> Graph:
    """Delete every edge whose endpoints share a colour; the colouring is then proper."""
    colors = _coloring_map(g, coloring)
    edges = frozenset((u, v) for u, v in g.edges if colors[u] != colors[v])
    return Graph(n=g.n, edges=edges, name=_derived_name(g, "pruned"))


@dataclass(frozen=True)
class Relation:
    text: str
    lhs: object
    rhs: object
    holds: bool

    def to_dict(self) -> Dict[str, object]:
        return {"lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


@dataclass
class GadgetReport:
    gadget: str
    base_graph: str
    output_graph: Optional[Graph] = None
    expected: List[str] = field(default_factory=list)
    measured: Dict[str, Relation] = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return all(relation.holds for relation in self.measured.values())

    def add(self, text: str, lhs: object, rhs: object, holds: Optional[bool] = None) -> None:
        self.expected.append(text)
        self.measured[text] = Relation(text, lhs, rhs, lhs == rhs if holds is None else holds)

    def to_dict(self) -> Dict[str, object]:
        return {
            "gadget": self.gadget,
            "base_graph": self.base_graph,
            "output": None if self.output_graph is None else {
                "n": self.output_graph.n,
                "m": self.output_graph.m,
            },
            "expected": list(self.expected),
            "measured": {text: relation.to_dict() for text, relation in self.measured.items()},
            "all_hold": self.all_hold,
        }


class _Values:
    """Lazily computed exact parameter values of one graph."""

    def __init__(self, g: Graph, ceiling: Optional[int]) -> None:
        self.g = g
        self.ceiling = ceiling
        self._cache: Dict[ParameterKind, object] = {}

    def solution(self, kind: ParameterKind):
        if kind not in self._cache:
            self._cache[kind] = exact_solve(self.g, kind, ceiling=self.ceiling)
        return self._cache[kind]

    def __getitem__(self, kind: ParameterKind) -> int:
        return self.solution(kind).value


def _universal_count(g: Graph) -> int:
    return sum(1 for v in g.vertices if g.degree(v) == g.n - 1)


def _check_dominating_vertex(report: GadgetReport, g: Graph, out: Graph, base: _Values, image: _Values, **_: object) -> None:
    report.add("α(out) = α(in)", image[ALPHA], base[ALPHA])
    report.add("ω(out) = ω(in)+1", image[OMEGA], base[OMEGA] + 1)
    report.add("χ(out) = χ(in)+1", image[CHI], base[CHI] + 1)
    report.add("τ(out) = τ(in)+1", image[TAU], base[TAU] + 1)
    report.add("ν(out) = ν(in)+1", image[NU], base[NU] + 1)
    report.add("γ(out) = 1", image[GAMMA], 1)
    report.add("i(out) = 1", image[INDDOM], 1)
    report.add("out has a universal vertex", _universal_count(out) >= 1, True)


def _check_double_copy(report: GadgetReport, g: Graph, out: Graph, base: _Values, image: _Values, **_: object) -> None:
    report.add("γ(out) = 2", image[GAMMA], 2)
    report.add("i(out) = i(in)+1", image[INDDOM], base[INDDOM] + 1)
    report.add("out has no universal vertex", _universal_count(out), 0)


def _check_pendant(report: GadgetReport, g: Graph, out: Graph, base: _Values, image: _Values,
                   vprime: Sequence[int] = (), ceiling: Optional[int] = None, **_: object) -> None:
    gamma, gamma_out = base[GAMMA], image[GAMMA]
    report.add("γ(in) <= γ(out) <= γ(in)+1", gamma_out, (gamma, gamma + 1), gamma <= gamma_out <= gamma + 1)
    contains = min_dominating_containing(g, vprime, ceiling=ceiling) == gamma
    report.add("γ(out) = γ(in) iff a minimum dominating set contains V'", gamma_out == gamma, contains)


def _check_edge_product(report: GadgetReport, g: Graph, out: Graph, base: _Values, image: _Values, **_: object) -> None:
    report.add("α(out) = α(in)", image[ALPHA], base[ALPHA])
    report.add("ν(out) = 2(n-α(in))", image[NU], 2 * (g.n - base[ALPHA]))


def _check_blowup(report: GadgetReport, g: Graph, out: Graph, base: _Values, image: _Values,
                  k: int = 1, **_: object) -> None:
    report.add("α(out) <= k", image[ALPHA], k, image[ALPHA] <= k)
    if k >= base[INDDOM]:
        report.add("i(out) = i(in) when k >= i(in)", image[INDDOM], base[INDDOM])
    witness = image.solution(INDDOM).witness
    copies = {v // g.n for v in witness}
    if len(copies) < k:
        projection = sorted({v % g.n for v in witness})
        report.add(
            "projection of a copy-missing i-witness is independent dominating",
            is_feasible(g, INDDOM, projection),
            True,
        )


def _check_pruned(report: GadgetReport, g: Graph, out: Graph, base: _Values, image: _Values,
                  coloring: Optional[Coloring] = None, **_: object) -> None:
    colors = _coloring_map(g, coloring if coloring is not None else ())
    k = max(colors.values(), default=0)
    report.add("χ(out) <= k", image[CHI], k, image[CHI] <= k)
    report.add("colouring is proper on out", all(colors[u] != colors[v] for u, v in out.edges), True)
    colorful = any(
        len({colors[v] for v in group}) == k and all(g.has_edge(a, b) for a, b in combinations(group, 2))
        for group in combinations(g.vertices, k)
    ) if k else True
    report.add("ω(out) = k iff in has a colourful k-clique", image[OMEGA] == k, colorful)


@dataclass(frozen=True)
class GadgetSpec:
    name: str
    build: Callable[..., Graph]
    check: Callable[..., None]
    arguments: Tuple[str, ...] = ()


GADGETS: Dict[str, GadgetSpec] = {
    spec.name: spec
    for spec in (
        GadgetSpec("add-dominating-vertex", lambda g: add_dominating_vertex(g), _check_dominating_vertex),
        GadgetSpec("double-copy-gadget", lambda g: double_copy_gadget(g), _check_double_copy),
        GadgetSpec("pendant-matching", lambda g, vprime=(): pendant_matching(g, vprime), _check_pendant, ("vprime",)),
        GadgetSpec("edge-product", lambda g: edge_product(g), _check_edge_product),
        GadgetSpec("clique-blowup", lambda g, k=1: clique_blowup(g, k), _check_blowup, ("k",)),
        GadgetSpec(
            "prune-monochromatic-edges",
            lambda g, coloring=(): prune_monochromatic_edges(g, coloring),
            _check_pruned,
            ("coloring",),
        ),
    )
}


def get_gadget(name: str) -> GadgetSpec:
    key = name.strip().replace("_", "-")
    try:
        return GADGETS[key]
    except KeyError:
        known = ", ".join(GADGETS)
        raise GraphInputError(f"Unknown gadget '{name}' (expected one of: {known}).") from None


def build_gadget(name: str, g: Graph, **arguments: object) -> Graph:
    spec = get_gadget(name)
    return spec.build(g, **{key: value for key, value in arguments.items() if key in spec.arguments})


def verify_identity(name: str, g: Graph, *, ceiling: Optional[int] = None, **arguments: object) -> GadgetReport:
    """Build the gadget, compute the parameters on both graphs exactly and evaluate its relations."""
    spec = get_gadget(name)
    passed = {key: value for key, value in arguments.items() if key in spec.arguments}
    out = spec.build(g, **passed)
    report = GadgetReport(gadget=spec.name, base_graph=g.label, output_graph=out)
    spec.check(report, g, out, _Values(g, ceiling), _Values(out, ceiling), ceiling=ceiling, **passed)
    if not report.all_hold:
        failed = [text for text, relation in report.measured.items() if not relation.holds]
        logger.warning("gadget %s on %s: failed %s", spec.name, g.label, failed)
    return report
