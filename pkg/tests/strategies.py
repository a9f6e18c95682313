from __future__ import annotations

import random
from itertools import combinations
from typing import Optional

from hypothesis import strategies as st
from hypothesis.strategies import DrawFn, composite

from vertexparams.graph import Graph


@composite
def graphs(draw: DrawFn, min_n: int = 0, max_n: int = 8, density: Optional[float] = None) -> Graph:
    """Simple graphs on 0..n-1; with a density the edges come from a drawn seed instead of per-pair booleans."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if density is None:
        keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        edges = [pair for pair, kept in zip(pairs, keep) if kept]
    else:
        rng = random.Random(draw(st.integers(0, 2**32 - 1)))
        edges = [pair for pair in pairs if rng.random() < density]
    return Graph(n=n, edges=frozenset(edges))


@composite
def forests(draw: DrawFn, min_n: int = 0, max_n: int = 12) -> Graph:
    """Each vertex v > 0 either hangs off an earlier vertex or starts a new tree."""
    n = draw(st.integers(min_n, max_n))
    edges = []
    for v in range(1, n):
        parent = draw(st.integers(-1, v - 1))
        if parent >= 0:
            edges.append((parent, v))
    return Graph(n=n, edges=frozenset(edges))
