from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import replace
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence

from .bench import FAMILIES, rows_to_csv, rows_to_records, run_bench
from .config import Config, load_config, validate_config
from .errors import VertexParamsError
from .evaluation import compute_matrix
from .formats import FORMATS, format_graph, parse_graph, read_graph
from .gadgets import GADGETS, build_gadget, verify_identity
from .generators import RandomGraphSpec, named_graph, random_graph
from .graph import Graph
from .kinds import ALL_KINDS, ParameterKind
from .reports import STATUS_OK, STATUS_TIMEOUT, solve_report
from .solvers import SOLVERS
from .suites import SUITES, run_suites

logger = logging.getLogger("vertexparams")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_TIMEOUT = 2

DEFAULT_CONFIG = Path("config/default_config.toml")


def load_graph(source: str, format: Optional[str]) -> Graph:
    """A graph file, '-' for standard input, or '@name[:args]' from the named catalogue."""
    if source.startswith("@"):
        return named_graph(source[1:])
    if source == "-":
        return parse_graph(sys.stdin.buffer.read(), format or "edgelist", name="stdin")
    return read_graph(source, format)


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'") from None


def _csv(rows: Iterable[Dict[str, object]], columns: Sequence[str]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(columns), lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()


def _emit(text: str, out: Optional[Path] = None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        out.write_text(text, encoding="utf-8")


def _json(payload: object) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False)


def _effective_config(args: argparse.Namespace) -> Config:
    path = args.config
    if path is None and DEFAULT_CONFIG.exists():
        path = DEFAULT_CONFIG
    config = load_config(path)
    if args.timeout_ms is not None:
        config = replace(config, solver=replace(config.solver, timeout_ms=args.timeout_ms))
    if args.seed is not None:
        config = replace(config, verify=replace(config.verify, seed=args.seed))
    verify_overrides = {
        key: getattr(args, key, None) for key in ("trials", "max_n", "workers") if getattr(args, key, None) is not None
    }
    if verify_overrides:
        config = replace(config, verify=replace(config.verify, **verify_overrides))
    return validate_config(config)


def _configure_logging(config: Config, verbosity: int) -> None:
    level = getattr(logging, config.logging.level.upper(), logging.WARNING)
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = min(level, logging.INFO)
    logging.basicConfig(level=level, format=config.logging.format, stream=sys.stderr, force=True)


def cmd_param(args: argparse.Namespace, config: Config) -> int:
    g = load_graph(args.graph, args.format)
    kind = ParameterKind.parse(args.parameter)
    report = solve_report(g, kind, args.solver or config.solver.default_solver, config)
    payload = report.to_dict()
    if args.output == "csv":
        payload["witness"] = " ".join(str(v) for v in report.witness)
        _emit(_csv([payload], list(payload)))
    else:
        _emit(_json(payload))
    if report.status == STATUS_TIMEOUT:
        return EXIT_TIMEOUT
    return EXIT_OK if report.status == STATUS_OK else EXIT_ERROR


def cmd_matrix(args: argparse.Namespace, config: Config) -> int:
    g = load_graph(args.graph, args.format)
    matrix = compute_matrix(g, args.solver, config)
    if args.output == "csv":
        rows = [
            {"parameter": kind.short, "value": report.value, "status": report.status, "solver": report.solver}
            for kind, report in matrix.entries.items()
        ]
        _emit(_csv(rows, ("parameter", "value", "status", "solver")))
    else:
        _emit(_json(matrix.to_dict()))
    if any(report.status == STATUS_TIMEOUT for report in matrix.entries.values()):
        return EXIT_TIMEOUT
    return EXIT_OK if matrix.ok else EXIT_ERROR


def cmd_gadget(args: argparse.Namespace, config: Config) -> int:
    g = load_graph(args.graph, args.format)
    arguments = {"k": args.k, "vprime": args.vprime or [], "coloring": args.coloring or []}
    out = build_gadget(args.name, g, **arguments)
    if not args.verify:
        _emit(format_graph(out, args.format or "edgelist"), args.out)
        return EXIT_OK
    report = verify_identity(args.name, g, ceiling=config.oracle.brute_force_ceiling, **arguments)
    payload = {"graph": out.to_dict(), "report": report.to_dict()}
    _emit(_json(payload), args.out)
    return EXIT_OK if report.all_hold else EXIT_ERROR


def cmd_random(args: argparse.Namespace, config: Config) -> int:
    spec = RandomGraphSpec(n=args.n, edge_probability=args.p, seed=args.seed if args.seed is not None else 0)
    _emit(format_graph(random_graph(spec), args.format or "edgelist"), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: Config) -> int:
    names = args.suites or ["all"]
    unknown = [name for name in names if name != "all" and name not in SUITES]
    if unknown:
        raise ValueError(f"Unknown suite(s): {', '.join(unknown)}.")
    results = run_suites(names, config)
    ok = all(result.ok for result in results)
    if args.output == "csv":
        _emit(_csv((result.to_dict() for result in results), ("suite", "trials", "passed", "failed")))
    else:
        _emit(_json({"seed": config.verify.seed, "ok": ok, "suites": [result.to_dict() for result in results]}))
    return EXIT_OK if ok else EXIT_ERROR


def cmd_bench(args: argparse.Namespace, config: Config) -> int:
    bench = config.bench
    if args.family is not None:
        bench = replace(bench, family=args.family)
    if args.sizes is not None:
        bench = replace(bench, sizes=tuple(args.sizes))
    if args.extra_edges is not None:
        bench = replace(bench, extra_edges=args.extra_edges)
    if args.repeats is not None:
        bench = replace(bench, repeats=args.repeats)
    config = replace(config, bench=bench)
    kinds = [ParameterKind.parse(text) for text in (args.parameter or ["gamma"])]
    rows = list(run_bench(kinds, args.solver or config.solver.default_solver, config, seed=args.seed or 0))
    if args.output == "json":
        _emit(_json(rows_to_records(rows)))
    else:
        _emit(rows_to_csv(rows))
    return EXIT_OK if all(row.status == STATUS_OK for row in rows) else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, default=None,
                        help="Path to a TOML config (default: config/default_config.toml when present).")
    common.add_argument("--format", choices=FORMATS, default=None,
                        help="Graph file format (default: by extension, .col/.dimacs are DIMACS).")
    common.add_argument("--seed", type=int, default=None, help="Seed for every random choice.")
    common.add_argument("--timeout-ms", type=int, default=None, help="Time budget per solver invocation.")
    common.add_argument("--solver", choices=tuple(SOLVERS) + ("auto",), default=None, help="Solver to use.")
    common.add_argument("--output", choices=("json", "csv"), default=None, help="Report format.")
    common.add_argument("-v", "--verbose", action="count", default=0, help="Log to stderr (-v info, -vv debug).")

    parser = argparse.ArgumentParser(
        prog="vertexparams",
        description="Exact, FPT and oracle-reduction solvers for seven vertex parameters of graphs.",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    kinds = ", ".join(kind.short for kind in ALL_KINDS)

    param = commands.add_parser("param", parents=[common], help="Compute one parameter with a witness.")
    param.add_argument("graph", help="Graph file, '-' for stdin, or @name[:args] (e.g. @petersen, @cycle:5).")
    param.add_argument("parameter", help=f"One of: {kinds}.")
    param.set_defaults(handler=cmd_param)

    matrix = commands.add_parser("matrix", parents=[common], help="All seven parameters plus the inequality check.")
    matrix.add_argument("graph")
    matrix.set_defaults(handler=cmd_matrix)

    gadget = commands.add_parser("gadget", parents=[common], help="Build a gadget graph, optionally verifying it.")
    gadget.add_argument("name", choices=tuple(GADGETS))
    gadget.add_argument("graph")
    gadget.add_argument("--k", type=int, default=1, help="Copies for clique-blowup.")
    gadget.add_argument("--vprime", type=_int_list, default=None, help="V' for pendant-matching, e.g. 0,2.")
    gadget.add_argument("--coloring", type=_int_list, default=None,
                        help="Colours 1..k per vertex for prune-monochromatic-edges, e.g. 1,2,1.")
    gadget.add_argument("--verify", action="store_true", help="Check the gadget's identities with the exact oracle.")
    gadget.add_argument("--out", type=Path, default=None, help="Write to a file instead of stdout.")
    gadget.set_defaults(handler=cmd_gadget)

    rand = commands.add_parser("random", parents=[common], help="Write a seeded G(n, p) graph.")
    rand.add_argument("--n", type=int, required=True)
    rand.add_argument("--p", type=float, required=True, help="Edge probability in [0, 1].")
    rand.add_argument("--out", type=Path, default=None)
    rand.set_defaults(handler=cmd_random)

    verify = commands.add_parser("verify", parents=[common], help="Run seeded property suites.")
    verify.add_argument("suites", nargs="*", default=None,
                        help=f"Suites to run (default all): {', '.join(SUITES)}.")
    verify.add_argument("--trials", type=int, default=None)
    verify.add_argument("--max-n", dest="max_n", type=int, default=None)
    verify.add_argument("--workers", type=int, default=None)
    verify.set_defaults(handler=cmd_verify)

    bench = commands.add_parser("bench", parents=[common], help="Time solvers on a graph family (CSV).")
    bench.add_argument("--family", choices=FAMILIES, default=None)
    bench.add_argument("--sizes", type=_int_list, default=None, help="Comma-separated n values.")
    bench.add_argument("--extra-edges", dest="extra_edges", type=int, default=None)
    bench.add_argument("--repeats", type=int, default=None)
    bench.add_argument("--parameter", action="append", default=None, help=f"Repeatable; one of: {kinds}.")
    bench.set_defaults(handler=cmd_bench)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _effective_config(args)
    except (FileNotFoundError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    _configure_logging(config, args.verbose)
    try:
        return args.handler(args, config)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except VertexParamsError as exc:
        logger.debug("command failed", exc_info=True)
        print(f"{exc.code} error: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT if exc.code == "timeout" else EXIT_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
