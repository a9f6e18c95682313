"""Graph file formats.

edgelist: a header "p <n> <m>" then m lines "<u> <v>", 0-based ids.
dimacs:   "c" comment lines, a header "p edge <n> <m>" then "e <u> <v>" lines, 1-based ids.
Both accept '#' comments and blank lines. Duplicate edges collapse; the edge
count in the header is informational.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, List, Optional, Set, Tuple, Union

from .errors import GraphParseError
from .graph import Edge, Graph

FORMATS = ("edgelist", "dimacs")


def _decode(data: Union[bytes, str]) -> str:
    if isinstance(data, str):
        return data
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = data.count(b"\n", 0, exc.start) + 1
        raise GraphParseError(f"invalid UTF-8 byte 0x{data[exc.start]:02x}", line) from None


def _lines(data: Union[bytes, str]) -> Iterable[Tuple[int, List[str]]]:
    text = _decode(data)
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            yield number, content.split()


def _int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f"expected an integer, got '{token}'", line) from None


def parse_graph(data: Union[bytes, str], format: str = "edgelist", name: str = "") -> Graph:
    if format not in FORMATS:
        raise GraphParseError(f"unknown format '{format}' (expected one of: {', '.join(FORMATS)})")
    dimacs = format == "dimacs"
    shift = 1 if dimacs else 0
    n: Optional[int] = None
    edges: Set[Edge] = set()
    for line, tokens in _lines(data):
        head = tokens[0]
        if dimacs and head == "c":
            continue
        if head == "p":
            if n is not None:
                raise GraphParseError("second header", line)
            body = tokens[1:]
            if dimacs:
                if len(body) != 3 or body[0] not in {"edge", "col"}:
                    raise GraphParseError("malformed header, expected 'p edge <n> <m>'", line)
                body = body[1:]
            elif len(body) != 2:
                raise GraphParseError("malformed header, expected 'p <n> <m>'", line)
            n = _int(body[0], line)
            if n < 0 or _int(body[1], line) < 0:
                raise GraphParseError("header counts must be non-negative", line)
            continue
        if n is None:
            raise GraphParseError("edge before the 'p' header", line)
        if dimacs:
            if head != "e" or len(tokens) != 3:
                raise GraphParseError("expected 'e <u> <v>'", line)
            tokens = tokens[1:]
        elif len(tokens) != 2:
            raise GraphParseError("expected '<u> <v>'", line)
        u, v = (_int(token, line) - shift for token in tokens)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u + shift}", line)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"endpoint outside the {n} declared vertices", line)
        edges.add((u, v) if u < v else (v, u))
    if n is None:
        raise GraphParseError("missing 'p' header")
    return Graph(n=n, edges=frozenset(edges), name=name)


def read_graph(path: Union[str, Path], format: Optional[str] = None) -> Graph:
    source = Path(path)
    if not source.exists():
        raise FileNotFoundError(f"Graph file not found: {source}")
    chosen = format or ("dimacs" if source.suffix in {".col", ".dimacs"} else "edgelist")
    return parse_graph(source.read_bytes(), chosen, name=source.stem)


def format_graph(g: Graph, format: str = "edgelist") -> str:
    if format not in FORMATS:
        raise GraphParseError(f"unknown format '{format}' (expected one of: {', '.join(FORMATS)})")
    if format == "dimacs":
        lines = [f"c {g.label}", f"p edge {g.n} {g.m}"]
        lines.extend(f"e {u + 1} {v + 1}" for u, v in g.sorted_edges)
    else:
        lines = [f"# {g.label}", f"p {g.n} {g.m}"]
        lines.extend(f"{u} {v}" for u, v in g.sorted_edges)
    return "\n".join(lines) + "\n"
