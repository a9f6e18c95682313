"""Vertex parameters of graphs: exact oracle, FPT solvers by feedback vertex set, and oracle reductions."""

from .config import Config, load_config
from .errors import (
    ContractViolation,
    GraphInputError,
    GraphParseError,
    PreconditionError,
    SizeLimitError,
    SolverTimeout,
    VertexParamsError,
)
from .evaluation import ParameterMatrix, compute_matrix
from .exact import exact_solve
from .fvs import min_fvs
from .graph import Graph, complement, induced_subgraph
from .kinds import ALL_KINDS, Direction, ParameterKind
from .reports import SolveReport, solve_report
from .solution import VertexSetSolution, is_feasible, verify_witness

__version__ = "0.1.0"

__all__ = [
    "ALL_KINDS",
    "Config",
    "ContractViolation",
    "Direction",
    "Graph",
    "GraphInputError",
    "GraphParseError",
    "ParameterKind",
    "ParameterMatrix",
    "PreconditionError",
    "SizeLimitError",
    "SolveReport",
    "SolverTimeout",
    "VertexParamsError",
    "VertexSetSolution",
    "complement",
    "compute_matrix",
    "exact_solve",
    "induced_subgraph",
    "is_feasible",
    "load_config",
    "min_fvs",
    "solve_report",
    "verify_witness",
]
