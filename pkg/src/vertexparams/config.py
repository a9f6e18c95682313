from __future__ import annotations

from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple, Type, TypeVar

try:  # Python 3.11+
    import tomllib
except ModuleNotFoundError:  # pragma: no cover - fallback for 3.10
    import tomli as tomllib  # type: ignore[no-redef]

BACKING_SOLVERS = ("exact", "fpt-nu")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@dataclass(frozen=True)
class OracleConfig:
    brute_force_ceiling: int = 22
    chi_time_budget_ms: int = 60000


@dataclass(frozen=True)
class SolverConfig:
    timeout_ms: int = 60000
    default_solver: str = "fpt-nu"
    matrix_solver: str = "auto"


@dataclass(frozen=True)
class ReductionConfig:
    backing_solver: str = "fpt-nu"


@dataclass(frozen=True)
class VerifyConfig:
    trials: int = 500
    seed: int = 7
    min_n: int = 4
    max_n: int = 14
    densities: Tuple[float, ...] = (0.2, 0.5, 0.8)
    gadget_max_n: int = 8
    reduction_max_n: int = 12
    workers: int = 1


@dataclass(frozen=True)
class BenchConfig:
    family: str = "cycle-sparse"
    sizes: Tuple[int, ...] = (25, 50, 100)
    extra_edges: int = 6
    repeats: int = 1


@dataclass(frozen=True)
class LoggingConfig:
    level: str = "WARNING"
    format: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"


@dataclass(frozen=True)
class Config:
    oracle: OracleConfig = field(default_factory=OracleConfig)
    solver: SolverConfig = field(default_factory=SolverConfig)
    reductions: ReductionConfig = field(default_factory=ReductionConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)
    bench: BenchConfig = field(default_factory=BenchConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)


Section = TypeVar("Section")


def _coerce(section: str, key: str, default: Any, value: Any) -> Any:
    where = f"{section}.{key}"
    if isinstance(default, bool):
        if not isinstance(value, bool):
            raise ValueError(f"{where} must be a boolean.")
        return value
    if isinstance(default, int):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValueError(f"{where} must be an integer.")
        return value
    if isinstance(default, float):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ValueError(f"{where} must be a number.")
        return float(value)
    if isinstance(default, str):
        if not isinstance(value, str) or not value.strip():
            raise ValueError(f"{where} must be a non-empty string.")
        return value.strip()
    if isinstance(default, tuple):
        if not isinstance(value, list) or not value:
            raise ValueError(f"{where} must be a non-empty array.")
        return tuple(_coerce(section, key, default[0], item) for item in value)
    raise ValueError(f"Unsupported setting {where}.")  # pragma: no cover


def _parse_section(raw: Mapping[str, Any], name: str, cls: Type[Section]) -> Section:
    section_raw = raw.get(name, {})
    if section_raw is None:
        section_raw = {}
    if not isinstance(section_raw, Mapping):
        raise ValueError(f"[{name}] must be a table if provided.")
    defaults = cls()
    known = {item.name for item in fields(cls)}  # type: ignore[arg-type]
    unknown = sorted(set(section_raw) - known)
    if unknown:
        raise ValueError(f"Unknown key(s) in [{name}]: {', '.join(unknown)}.")
    values: Dict[str, Any] = {
        key: _coerce(name, key, getattr(defaults, key), value) for key, value in section_raw.items()
    }
    return replace(defaults, **values)  # type: ignore[type-var]


def validate_config(config: Config) -> Config:
    if config.oracle.brute_force_ceiling < 0:
        raise ValueError("oracle.brute_force_ceiling must be non-negative.")
    for key, value in (("oracle.chi_time_budget_ms", config.oracle.chi_time_budget_ms),
                       ("solver.timeout_ms", config.solver.timeout_ms)):
        if value <= 0:
            raise ValueError(f"{key} must be positive.")
    if config.reductions.backing_solver not in BACKING_SOLVERS:
        raise ValueError(f"reductions.backing_solver must be one of: {', '.join(BACKING_SOLVERS)}.")
    verify = config.verify
    if verify.trials < 0 or verify.workers < 1:
        raise ValueError("verify.trials must be >= 0 and verify.workers >= 1.")
    if not 0 <= verify.min_n <= verify.max_n:
        raise ValueError("verify.min_n must be between 0 and verify.max_n.")
    if any(not 0.0 <= p <= 1.0 for p in verify.densities):
        raise ValueError("verify.densities must lie in [0, 1].")
    if any(size < 0 for size in config.bench.sizes) or config.bench.repeats < 1:
        raise ValueError("bench.sizes must be non-negative and bench.repeats >= 1.")
    if config.logging.level.upper() not in LOG_LEVELS:
        raise ValueError(f"logging.level must be one of: {', '.join(LOG_LEVELS)}.")
    return config


def load_config(path: Optional[str | Path] = None) -> Config:
    """Read a TOML config; every section is optional and falls back to the defaults."""
    if path is None:
        return Config()
    config_path = Path(path)
    if not config_path.exists():
        raise FileNotFoundError(f"Config file not found: {config_path}")

    with config_path.open("rb") as handle:
        raw = tomllib.load(handle)

    config = Config(
        oracle=_parse_section(raw, "oracle", OracleConfig),
        solver=_parse_section(raw, "solver", SolverConfig),
        reductions=_parse_section(raw, "reductions", ReductionConfig),
        verify=_parse_section(raw, "verify", VerifyConfig),
        bench=_parse_section(raw, "bench", BenchConfig),
        logging=_parse_section(raw, "logging", LoggingConfig),
    )
    return validate_config(config)
