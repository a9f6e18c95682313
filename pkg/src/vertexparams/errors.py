from __future__ import annotations

from typing import Optional


class VertexParamsError(RuntimeError):
    code = "error"


class GraphInputError(VertexParamsError, ValueError):
    code = "input"


class GraphParseError(GraphInputError):
    code = "parse"

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(VertexParamsError):
    code = "precondition"


class SizeLimitError(VertexParamsError):
    code = "size"


class SolverTimeout(VertexParamsError):
    code = "timeout"


class ContractViolation(VertexParamsError):
    """An oracle answered in a way no exact oracle could."""

    code = "contract"
