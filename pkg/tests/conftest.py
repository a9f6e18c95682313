from __future__ import annotations

import pytest

from vertexparams.generators import (
    complete_graph,
    cycle_graph,
    edgeless_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from vertexparams.graph import Graph


@pytest.fixture
def k1() -> Graph:
    return complete_graph(1)


@pytest.fixture
def k3() -> Graph:
    return complete_graph(3)


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def c4() -> Graph:
    return cycle_graph(4)


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def c6() -> Graph:
    return cycle_graph(6)


@pytest.fixture
def p3() -> Graph:
    return path_graph(3)


@pytest.fixture
def star5() -> Graph:
    return star_graph(5)


@pytest.fixture
def empty() -> Graph:
    return edgeless_graph(0)


@pytest.fixture
def petersen() -> Graph:
    return petersen_graph()
