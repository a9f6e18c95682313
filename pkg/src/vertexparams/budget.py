from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .errors import SolverTimeout


@dataclass
class Deadline:
    """Cooperative time budget checked from inside search loops."""

    timeout_ms: Optional[int] = None
    label: str = "solver"
    started: float = field(default_factory=time.monotonic)

    @classmethod
    def after(cls, timeout_ms: Optional[int], label: str = "solver") -> "Deadline":
        if timeout_ms is not None and timeout_ms <= 0:
            raise ValueError("timeout_ms must be positive.")
        return cls(timeout_ms=timeout_ms, label=label)

    @classmethod
    def unlimited(cls) -> "Deadline":
        return cls(timeout_ms=None)

    @property
    def elapsed_ms(self) -> float:
        return (time.monotonic() - self.started) * 1000.0

    @property
    def remaining_ms(self) -> Optional[float]:
        if self.timeout_ms is None:
            return None
        return max(0.0, self.timeout_ms - self.elapsed_ms)

    @property
    def expired(self) -> bool:
        return self.timeout_ms is not None and self.elapsed_ms >= self.timeout_ms

    def check(self) -> None:
        if self.expired:
            raise SolverTimeout(f"{self.label} exceeded its budget of {self.timeout_ms} ms")


def ensure_deadline(deadline: Optional[Deadline]) -> Deadline:
    return deadline if deadline is not None else Deadline.unlimited()
