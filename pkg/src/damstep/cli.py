"""Command-line front end: solve, sample, sweep, verify.

JSON config in, JSON or CSV out.  All numbers are printed with 12
significant digits and a period decimal separator so identical inputs give
byte-identical output.

Exit codes: 0 ok, 1 verification failure, 2 input/parse error, 3 domain
error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

import numpy as np

from . import verify as verify_mod
from .connection import strip_bound
from .core import BedStep, State, energy_density
from .damsolver import DamProblem, DamSolution, NoFlow, solve_dam
from .errors import DomainError
from .sampler import sample, shadow_profile

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_DOMAIN = 3

_CONFIG_KEYS = {"h_l", "u_l", "b0", "b1", "g", "sample", "epsilon"}
_SAMPLE_KEYS = {"t", "x_min", "x_max", "n"}


class ConfigError(ValueError):
    """Malformed configuration file (shape or types)."""


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _round12(x: float) -> float:
    return float(f"{x:.12g}")


def _require_number(obj: dict, key: str, where: str) -> float:
    if key not in obj:
        raise ConfigError(f"missing key '{key}' in {where}")
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"key '{key}' in {where} must be a number")
    return float(value)


def load_config(path: str) -> dict:
    """Parse and shape-check a problem configuration file."""
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    unknown = set(raw) - _CONFIG_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")

    cfg = {key: _require_number(raw, key, "config") for key in ("h_l", "u_l", "b0", "b1")}
    cfg["g"] = _require_number(raw, "g", "config") if "g" in raw else 9.81
    if "epsilon" in raw:
        cfg["epsilon"] = _require_number(raw, "epsilon", "config")
    if "sample" in raw:
        block = raw["sample"]
        if not isinstance(block, dict) or set(block) - _SAMPLE_KEYS:
            raise ConfigError("'sample' must be an object with keys t, x_min, x_max, n")
        spec = {key: _require_number(block, key, "sample") for key in ("t", "x_min", "x_max")}
        n = block.get("n")
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise ConfigError("'sample.n' must be a positive integer")
        spec["n"] = n
        cfg["sample"] = spec
    return cfg


def build_problem(cfg: dict) -> DamProblem:
    """Value-validate a parsed config into a problem (DomainError on bad values)."""
    if cfg.get("epsilon", 1.0) <= 0:
        raise DomainError("epsilon must be positive")
    step = BedStep(cfg["b0"], cfg["b1"], cfg["g"])
    return DamProblem(State(cfg["h_l"], cfg["u_l"]), step)


def summarize(result: DamSolution | NoFlow, problem: DamProblem) -> dict:
    """JSON-ready solution summary with 12-significant-digit floats."""
    if isinstance(result, NoFlow):
        out = {
            "status": "no_flow",
            "reason": result.reason.value,
            "h_under": _round12(result.h_under),
        }
        if result.reason.value == "rest_state":
            out["h0"] = _round12(result.h_under)
        return out
    bound = strip_bound(result.h0, result.u0, problem.step)
    interval = {
        "h_tilde": _round12(result.interval.h_tilde),
        "h_under": _round12(result.interval.h_under),
    }
    if result.interval.h_hat is not None:
        interval["h_hat"] = _round12(result.interval.h_hat)
    return {
        "status": "flow",
        "h0": _round12(result.h0),
        "u0": _round12(result.u0),
        "c1": _round12(result.c1),
        "h1": _round12(result.conn.right.h),
        "u1": _round12(result.conn.right.u),
        "chi": _round12(result.conn.chi),
        "chi_bar": _round12(bound.chi_bar),
        "u_m": _round12(result.u_m),
        "u_m_alt": _round12(result.u_m_alt),
        "branch": result.branch,
        "E": _round12(result.E_value),
        "tie_flag": result.tie,
        "interval": interval,
    }


def _parse_grid(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError("--grid expects 'xmin:xmax:n'")
    try:
        xmin, xmax = float(parts[0]), float(parts[1])
        n = int(parts[2])
    except ValueError as exc:
        raise ConfigError(f"bad --grid value: {exc}") from exc
    if n < 1:
        raise ConfigError("--grid needs n >= 1")
    return xmin, xmax, n


def _emit_csv(header: list[str], rows) -> None:
    sys.stdout.write(",".join(header) + "\n")
    for row in rows:
        sys.stdout.write(",".join(row) + "\n")


def cmd_solve(args) -> int:
    cfg = load_config(args.config)
    problem = build_problem(cfg)
    result = solve_dam(problem)
    print(json.dumps(summarize(result, problem), sort_keys=True))
    return EXIT_OK


def _no_flow_rows(result: NoFlow, problem: DamProblem, xs, t: float):
    # rest_state keeps a backward shock and still water of depth h_under
    # behind the step; jump_exceeds_hbar has no admissible solution, so the
    # initial field is reported.
    from .damsolver import upstream_from_depth

    step = problem.step
    left = problem.left
    if result.reason.value == "rest_state":
        _, c1 = upstream_from_depth(result.h_under, left.h, left.u, step.g)
        for x in xs:
            if x < c1 * t:
                yield x, left.h, left.u, step.b0
            elif x < 0:
                yield x, result.h_under, 0.0, step.b0
            else:
                yield x, 0.0, 0.0, step.b1
    else:
        for x in xs:
            if x < 0:
                yield x, left.h, left.u, step.b0
            else:
                yield x, 0.0, 0.0, step.b1


def cmd_sample(args) -> int:
    cfg = load_config(args.config)
    problem = build_problem(cfg)

    block = cfg.get("sample")
    t = args.t if args.t is not None else (block["t"] if block else None)
    if t is None:
        raise ConfigError("no sampling time: pass --t or a 'sample' config block")
    if args.grid is not None:
        xmin, xmax, n = _parse_grid(args.grid)
    elif block:
        xmin, xmax, n = block["x_min"], block["x_max"], block["n"]
    else:
        raise ConfigError("no sampling grid: pass --grid or a 'sample' config block")
    if t <= 0:
        raise DomainError("sampling time must be positive")
    epsilon = args.epsilon if args.epsilon is not None else cfg.get("epsilon")

    xs = np.linspace(xmin, xmax, n)
    g = problem.step.g
    result = solve_dam(problem)
    if isinstance(result, NoFlow):
        print(
            f"note: no_flow ({result.reason.value}); emitting the "
            f"{'rest-state' if result.reason.value == 'rest_state' else 'initial'} field",
            file=sys.stderr,
        )
        rows = _no_flow_rows(result, problem, xs, t)
        table = [(x, h, u, b) for x, h, u, b in rows]
    elif epsilon is not None:
        table = [tuple(row) for row in shadow_profile(result, epsilon, t, xs)]
    else:
        table = []
        for x in xs:
            p = sample(result, float(x), t)
            table.append((x, p.h, p.u, p.b))

    out = []
    for x, h, u, b in table:
        eta = energy_density(State(h, u), b, g)
        out.append([_fmt(x), _fmt(h), _fmt(u), _fmt(b), _fmt(eta)])
    _emit_csv(["x", "h", "u", "b", "eta"], out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    cfg = load_config(args.config)
    if args.vary not in ("h_l", "u_l", "b0", "b1", "g"):
        raise ConfigError(f"cannot vary '{args.vary}'")
    if args.steps < 1:
        raise ConfigError("--steps must be >= 1")
    if not (np.isfinite(args.start) and np.isfinite(args.stop)):
        raise ConfigError("sweep bounds must be finite")
    values = np.linspace(args.start, args.stop, args.steps)

    rows = []
    for value in values:
        point = dict(cfg)
        point[args.vary] = float(value)
        problem = build_problem(point)
        result = solve_dam(problem)
        if isinstance(result, NoFlow):
            rows.append([_fmt(value), "no_flow", "", "", ""])
        else:
            rows.append(
                [_fmt(value), "flow", _fmt(result.h0), _fmt(result.E_value), result.branch]
            )
    _emit_csv([args.vary, "status", "h0", "E", "branch"], rows)
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = load_config(args.config)
    problem = build_problem(cfg)
    result = solve_dam(problem)
    if isinstance(result, NoFlow):
        print(json.dumps({"status": "no_flow", "ok": True}, sort_keys=True))
        return EXIT_OK
    if args.perturb_chi:
        conn = dataclasses.replace(result.conn, chi=result.conn.chi + args.perturb_chi)
        result = dataclasses.replace(result, conn=conn)
    report = verify_mod.check_solution(result)
    failing = report.failing_fields()
    payload = {
        "status": "flow",
        "mass_flux": _round12(report.mass_flux),
        "momentum_source": _round12(report.momentum_source),
        "rankine_hugoniot": {
            "mass": _round12(report.rankine_hugoniot[0]),
            "momentum": _round12(report.rankine_hugoniot[1]),
        },
        "chi_in_bounds": report.chi_in_bounds,
        "entropy": report.entropy,
        "froude_right": _round12(report.froude_right),
        "ok": report.ok,
        "failed": failing,
    }
    print(json.dumps(payload, sort_keys=True))
    if failing:
        print(f"verification failed: {', '.join(failing)}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="damstep",
        description="Dam-break solver for shallow water over a bed step.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve and print a JSON summary")
    p_solve.add_argument("--config", required=True, help="path to a JSON problem config")
    p_solve.set_defaults(func=cmd_solve)

    p_sample = sub.add_parser("sample", help="sample the solution as CSV rows")
    p_sample.add_argument("--config", required=True)
    p_sample.add_argument("--t", type=float, default=None, help="sampling time > 0")
    p_sample.add_argument("--grid", default=None, help="abscissae as 'xmin:xmax:n'")
    p_sample.add_argument(
        "--epsilon", type=float, default=None, help="resolve the strip at width epsilon*t"
    )
    p_sample.set_defaults(func=cmd_sample)

    p_sweep = sub.add_parser("sweep", help="sweep one config key, CSV out")
    p_sweep.add_argument("--config", required=True)
    p_sweep.add_argument("--vary", required=True, help="config key to vary (e.g. b1)")
    p_sweep.add_argument("--from", dest="start", type=float, required=True)
    p_sweep.add_argument("--to", dest="stop", type=float, required=True)
    p_sweep.add_argument("--steps", type=int, required=True)
    p_sweep.set_defaults(func=cmd_sweep)

    p_verify = sub.add_parser("verify", help="residual report as JSON")
    p_verify.add_argument("--config", required=True)
    p_verify.add_argument("--perturb-chi", type=float, default=0.0, help=argparse.SUPPRESS)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def _merge_grid_value(argv: list[str]) -> list[str]:
    # argparse mistakes "-5:5:11" after --grid for an option; fold it in
    out = []
    skip = False
    for i, token in enumerate(argv):
        if skip:
            skip = False
            continue
        if token == "--grid" and i + 1 < len(argv):
            out.append(f"--grid={argv[i + 1]}")
            skip = True
        else:
            out.append(token)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(_merge_grid_value(sys.argv[1:] if argv is None else list(argv)))
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    raise SystemExit(main())
