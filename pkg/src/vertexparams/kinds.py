from __future__ import annotations

from enum import Enum


class Direction(str, Enum):
    MAX = "max"
    MIN = "min"


class ParameterKind(Enum):
    """The seven vertex parameters, with their optimisation direction and witness shape."""

    MAX_INDEPENDENT_SET = ("alpha", "α", Direction.MAX, "set")
    MIN_VERTEX_COVER = ("tau", "τ", Direction.MIN, "set")
    MAX_CLIQUE = ("omega", "ω", Direction.MAX, "set")
    CHROMATIC_NUMBER = ("chi", "χ", Direction.MIN, "coloring")
    MIN_DOMINATING_SET = ("gamma", "γ", Direction.MIN, "set")
    MIN_INDEPENDENT_DOMINATING_SET = ("i", "i", Direction.MIN, "set")
    MIN_FEEDBACK_VERTEX_SET = ("nu", "ν", Direction.MIN, "set")

    def __init__(self, short: str, symbol: str, direction: Direction, witness: str) -> None:
        self.short = short
        self.symbol = symbol
        self.direction = direction
        self.witness = witness

    @property
    def is_max(self) -> bool:
        return self.direction is Direction.MAX

    @classmethod
    def parse(cls, text: str) -> "ParameterKind":
        key = text.strip()
        for kind in cls:
            if key in {kind.short, kind.symbol, kind.name, kind.name.lower()}:
                return kind
        known = ", ".join(kind.short for kind in cls)
        raise ValueError(f"Unknown parameter '{text}' (expected one of: {known}).")


ALL_KINDS = tuple(ParameterKind)
