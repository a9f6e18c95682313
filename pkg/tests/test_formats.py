from __future__ import annotations

import pytest

from vertexparams.errors import GraphParseError
from vertexparams.formats import format_graph, parse_graph, read_graph
from vertexparams.generators import complete_graph, cycle_graph


def test_edgelist_triangle():
    g = parse_graph("p 3 3\n0 1\n1 2\n0 2\n")
    assert g.n == 3
    assert g.edges == complete_graph(3).edges


def test_dimacs_square_is_shifted_to_zero_based():
    text = "c a square\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n"
    assert parse_graph(text, "dimacs").edges == cycle_graph(4).edges


def test_duplicates_collapse_and_comments_are_skipped():
    g = parse_graph(b"# comment\np 3 9\n\n0 1\n1 0  # again\n0 1\n")
    assert g.edges == frozenset({(0, 1)})
    assert g.n == 3


def test_isolated_vertices_come_from_the_header():
    assert parse_graph("p 5 0\n").n == 5


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("p 2 1\n0 0\n", "line 2: self-loop"),
        ("p 2 1\n0 2\n", "line 2: endpoint"),
        ("0 1\n", "line 1: edge before"),
        ("p 2\n", "line 1: malformed header"),
        ("p 2 1\np 2 1\n", "line 2: second header"),
        ("p 3 1\n0 x\n", "line 2: expected an integer"),
        ("p 3 1\n0 1 2\n", "line 2: expected '<u> <v>'"),
        ("", "missing 'p' header"),
    ],
)
def test_malformed_edgelists(text, fragment):
    with pytest.raises(GraphParseError) as raised:
        parse_graph(text)
    assert fragment in str(raised.value)


def test_malformed_dimacs():
    with pytest.raises(GraphParseError) as raised:
        parse_graph("p edge 3 1\n1 2\n", "dimacs")
    assert raised.value.line == 2
    with pytest.raises(GraphParseError):
        parse_graph("p 3 1\n", "dimacs")


def test_invalid_utf8_is_a_parse_error_with_its_line():
    with pytest.raises(GraphParseError) as raised:
        parse_graph(b"p edge 2 1\ne 1 \xff2\n", "dimacs")
    assert raised.value.line == 2
    assert "0xff" in str(raised.value)


def test_unknown_format():
    with pytest.raises(GraphParseError):
        parse_graph("p 1 0\n", "graphml")


@pytest.mark.parametrize("fmt", ["edgelist", "dimacs"])
def test_format_is_read_back(fmt, petersen):
    assert parse_graph(format_graph(petersen, fmt), fmt).edges == petersen.edges


def test_format_graph_layout(c4):
    assert format_graph(c4) == "# C4\np 4 4\n0 1\n0 3\n1 2\n2 3\n"
    assert format_graph(c4, "dimacs").splitlines()[:3] == ["c C4", "p edge 4 4", "e 1 2"]


def test_read_graph_picks_the_format_from_the_suffix(tmp_path, c5):
    edgelist = tmp_path / "ring.txt"
    edgelist.write_text(format_graph(c5))
    dimacs = tmp_path / "ring.col"
    dimacs.write_text(format_graph(c5, "dimacs"))
    assert read_graph(edgelist).edges == c5.edges
    assert read_graph(dimacs).edges == c5.edges
    assert read_graph(edgelist).name == "ring"


def test_read_graph_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        read_graph(tmp_path / "absent.txt")
