"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines live.
Every criterion carries its runtime budget; budgets are asserted.
"""

import json
import math
import subprocess
import sys
import time
from contextlib import contextmanager

import numpy as np
import pytest

from damstep import (
    BedStep,
    Branch,
    DamProblem,
    DamSolution,
    NoFlow,
    NoFlowReason,
    State,
    char_speeds,
    fan_invariant,
    fan_state,
    froude,
    grid_min_E,
    hugoniot_u,
    mass_balance,
    optimal_connection,
    shock_speed,
    solve_dam,
    stagnation_depth,
    strip_bound,
)
from damstep.cli import main as cli_main

G = 9.81
REF = DamProblem(State(1.0, 1.0), BedStep(0.0, 0.2, G))


@contextmanager
def criterion(number: int, label: str, budget_s: float):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"[FAIL] criterion {number}: {label}")
        raise
    elapsed = time.perf_counter() - start
    assert elapsed < budget_s, f"criterion {number} took {elapsed:.2f}s (budget {budget_s}s)"
    print(f"[PASS] criterion {number}: {label} ({elapsed:.2f}s)")


def _admissible_draw(rng, cube_only=False):
    h0 = float(10 ** rng.uniform(-0.7, 0.7))
    g = float(rng.uniform(2.0, 20.0))
    y = float(rng.uniform(1e-3, 0.999))
    u0 = math.sqrt(y * g * h0)
    lo = h0 * (1 - y ** (1 / 3))
    if cube_only or rng.random() < 0.5:
        jump = float(rng.uniform(0.05, 0.95)) * lo
    else:
        hi = h0 * (3 - math.sqrt(1 + 8 * y)) / 2
        jump = lo + float(rng.uniform(0.05, 0.95)) * (hi - lo)
    b0 = float(rng.uniform(0.0, 1.0))
    return h0, u0, BedStep(b0, b0 + jump, g)


def test_criterion_1_connection_identities():
    with criterion(1, "connection identities on 1e4 random admissible inputs", 5.0):
        rng = np.random.default_rng(1001)
        for _ in range(10_000):
            h0, u0, step = _admissible_draw(rng)
            conn = optimal_connection(h0, u0, step)
            g = step.g
            h1, u1 = conn.right.h, conn.right.u
            assert abs(h1 * u1 - h0 * u0) <= 1e-12 * max(1.0, h0 * u0)
            mom = h1 * u1 * u1 + g * h1 * h1 / 2 - h0 * u0 * u0 - g * h0 * h0 / 2
            scale = max(1.0, abs(h0 * u0 * u0) + g * h0 * h0 / 2)
            assert abs(mom + g * step.jump * conn.chi) <= 1e-9 * scale
            bound = strip_bound(h0, u0, step).chi_bar
            assert -1e-12 <= conn.chi <= bound * (1 + 1e-9) + 1e-12
            assert h1 + step.b1 <= h0 + step.b0 + 1e-12


def test_criterion_2_minimizer_optimality():
    with criterion(2, "production-minimizing downstream depth beats a 4096 grid", 10.0):
        rng = np.random.default_rng(1002)
        for _ in range(1_000):
            h0, u0, step = _admissible_draw(rng)
            conn = optimal_connection(h0, u0, step)
            g = step.g
            q = h0 * u0
            top = h0 - step.jump
            grid = np.linspace(top * 1e-4, top, 4096)
            outflow = g * q * (grid + step.b1) + q**3 / (2 * grid * grid)
            ours = g * q * (conn.right.h + step.b1) + q**3 / (2 * conn.right.h ** 2)
            floor = float(outflow.min())
            assert ours <= floor + 1e-9 * max(1.0, abs(floor))


def test_criterion_3_critical_outflow():
    with criterion(3, "cube-root connections leave at Froude 1", 2.0):
        rng = np.random.default_rng(1003)
        for _ in range(10_000):
            h0, u0, step = _admissible_draw(rng, cube_only=True)
            conn = optimal_connection(h0, u0, step)
            assert conn.branch is Branch.CUBE_ROOT
            assert abs(froude(conn.right, step.g) - 1.0) <= 1e-10


def test_criterion_4_reference_case_vs_oracle():
    with criterion(4, "reference dam break matches the grid referee", 1.0):
        sol = solve_dam(REF)
        assert isinstance(sol, DamSolution)
        coarse = grid_min_E(REF, 10_000)
        fine = grid_min_E(REF, 20_000)
        assert coarse is not None and fine is not None
        cell = (sol.interval.h_under - sol.interval.h_tilde) / (10_000 - 1)
        # the two resolutions pin the same minimum
        assert abs(coarse[0] - fine[0]) <= cell
        assert coarse[1] == pytest.approx(fine[1], rel=1e-6)
        assert coarse[2] == fine[2] == "M1"
        # solver vs referee
        assert sol.branch == "M1"
        assert abs(sol.h0 - coarse[0]) <= cell
        assert sol.E_value == pytest.approx(coarse[1], rel=1e-6)
        # pinned reference numbers
        assert sol.h0 == pytest.approx(1.17, abs=5e-3)
        assert sol.E_value == pytest.approx(7.48, abs=1e-2)
        assert sol.conn.chi == pytest.approx(2.79, abs=0.03)
        assert sol.interval.h_under == pytest.approx(1.342, abs=5e-4)


def test_criterion_5_no_flow_threshold():
    with criterion(5, "steps above the stagnation depth always block the flow", 10.0):
        rng = np.random.default_rng(1005)
        for _ in range(1_000):
            h_l = float(10 ** rng.uniform(-0.5, 0.5))
            g = float(rng.uniform(2.0, 20.0))
            z = float(rng.uniform(0.02, 4.0))
            u_l = math.sqrt(z * g * h_l)
            h_under = stagnation_depth(h_l, u_l, g)
            jump = h_under * (1 + float(rng.uniform(0.01, 1.5)))
            b0 = float(rng.uniform(0.0, 1.0))
            result = solve_dam(DamProblem(State(h_l, u_l), BedStep(b0, b0 + jump, g)))
            assert isinstance(result, NoFlow)
            assert result.reason is NoFlowReason.JUMP_EXCEEDS_HBAR

        # sweep across the threshold: exactly one flow -> no_flow switch
        h_under = stagnation_depth(1.0, 1.0, G)
        values = np.linspace(0.1, 2.0, 20)
        statuses = []
        for b1 in values:
            result = solve_dam(DamProblem(State(1.0, 1.0), BedStep(0.0, float(b1), G)))
            statuses.append("no_flow" if isinstance(result, NoFlow) else "flow")
        flips = sum(1 for a, b in zip(statuses, statuses[1:]) if a != b)
        assert flips == 1
        first_blocked = values[statuses.index("no_flow")]
        step_width = values[1] - values[0]
        assert first_blocked - step_width <= h_under <= first_blocked


def test_criterion_6_monotonicity_suite():
    with criterion(6, "interval monotonicity checks on 1e3 random cases", 10.0):
        rng = np.random.default_rng(1006)
        for _ in range(1_000):
            h_l = float(10 ** rng.uniform(-0.5, 0.5))
            g = float(rng.uniform(2.0, 20.0))
            z = float(rng.uniform(0.02, 4.0))
            u_l = math.sqrt(z * g * h_l)
            b0 = float(rng.uniform(0.0, 1.0))
            h_under = stagnation_depth(h_l, u_l, g)
            h_tilde = h_l if z <= 1 else h_l * (math.sqrt(1 + 8 * z) - 1) / 2
            jump = float(rng.uniform(0.05, 0.95)) * h_under

            span = h_under - h_tilde
            h = np.linspace(h_tilde + 1e-6 * span, h_under, 512)
            slope = np.sqrt(g / 2 * (1 / h + 1 / h_l))
            u0 = u_l - slope * (h - h_l)
            c1 = u_l - slope * h

            # f(h_tilde) < 0: the stagnation root lies strictly above
            f_tilde = (
                h_tilde**3
                - h_l * h_tilde**2
                - (h_l * h_l + 2 / g * u_l * u_l * h_l) * h_tilde
                + h_l**3
            )
            assert f_tilde < 0

            q = h * u0
            r = np.cbrt(q * q / g) - h + jump
            tol_r = 1e-10 * max(1.0, float(np.abs(r).max()))
            assert np.all(np.diff(r) <= tol_r)

            tol_q = 1e-10 * max(1.0, float(np.abs(q).max()))
            assert np.all(np.diff(q) <= tol_q)

            eta = h * u0 * u0 / 2 + g * h * h / 2 + b0 * h
            eta_l = h_l * u_l * u_l / 2 + g * h_l * h_l / 2 + b0 * h_l
            h_func = -c1 * (eta - eta_l)
            tol_h = 1e-10 * max(1.0, float(np.abs(h_func).max()))
            assert np.all(h_func >= -tol_h)
            assert np.all(np.diff(h_func) >= -tol_h)


def test_criterion_7_shock_and_fan_identities():
    with criterion(7, "jump conditions and fan invariants on random draws", 5.0):
        rng = np.random.default_rng(1007)
        for _ in range(10_000):
            h_l = float(10 ** rng.uniform(-0.7, 0.7))
            u_l = float(rng.uniform(-3.0, 3.0))
            g = float(rng.uniform(1.0, 20.0))
            left = State(h_l, u_l)
            h = h_l * float(1 + 10 ** rng.uniform(-3, 1))
            u = hugoniot_u(1, h, left, g)
            c = shock_speed(1, h, left, g)
            mass = c * (h - h_l) - (h * u - h_l * u_l)
            jump = h * u * u + g * h * h / 2 - h_l * u_l * u_l - g * h_l * h_l / 2
            momentum = c * (h * u - h_l * u_l) - jump
            assert abs(mass) <= 1e-9 * max(1.0, abs(h * u - h_l * u_l))
            assert abs(momentum) <= 1e-9 * max(1.0, abs(jump))

        for _ in range(10_000):
            h_l = float(10 ** rng.uniform(-0.5, 0.5))
            u_l = float(rng.uniform(-2.0, 4.0))
            g = float(rng.uniform(1.0, 20.0))
            left = State(h_l, u_l)
            invariant = fan_invariant(1, left, g)
            lam1, _ = char_speeds(left, g)
            xi = float(rng.uniform(lam1, invariant))
            s = fan_state(1, xi, left, g)
            assert abs(s.u - math.sqrt(g * s.h) - xi) <= 1e-12 * max(1.0, abs(xi))
            assert abs(s.u + 2 * math.sqrt(g * s.h) - invariant) <= 1e-12 * max(
                1.0, abs(invariant)
            )


def test_criterion_8_mass_balance_convergence():
    with criterion(8, "mass defect shrinks at second order under refinement", 10.0):
        sol = solve_dam(REF)
        assert isinstance(sol, DamSolution)
        # interval with the shock only: the rule is exact
        assert mass_balance(sol, -3.0, -1.0, 1.0, 1e-3, n=64) <= 1e-12
        for a, b in [(-0.5, 2.0), (0.5, 4.0), (-4.0, 6.0)]:
            defects = []
            for n in (32, 64, 128):
                dt = 1e-2 * 32 / n
                defects.append(mass_balance(sol, a, b, 1.0, dt, n=n))
            orders = [math.log2(d0 / d1) for d0, d1 in zip(defects, defects[1:])]
            assert min(orders) >= 1.8, (a, b, defects, orders)


def test_criterion_9_cli_contract(tmp_path, capsys):
    with criterion(9, "CLI solve/sample/sweep/verify contract and exit codes", 2.0):
        config = tmp_path / "ref.json"
        config.write_text(
            json.dumps({"h_l": 1.0, "u_l": 1.0, "b0": 0.0, "b1": 0.2, "g": 9.81}),
            encoding="utf-8",
        )

        def run(*argv):
            code = cli_main(list(argv))
            captured = capsys.readouterr()
            return code, captured.out, captured.err

        code1, out1, _ = run("solve", "--config", str(config))
        code2, out2, _ = run("solve", "--config", str(config))
        assert code1 == code2 == 0
        assert out1 == out2  # byte-identical reruns
        summary = json.loads(out1)
        assert summary["status"] == "flow" and summary["branch"] == "M1"
        assert summary["u1"] == pytest.approx(
            summary["h0"] * summary["u0"] / summary["h1"], rel=1e-10
        )

        code, out, _ = run("sample", "--config", str(config), "--t", "1", "--grid", "-5:5:11")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "x,h,u,b,eta" and len(lines) == 12

        code, out, _ = run(
            "sweep", "--config", str(config), "--vary", "b1",
            "--from", "1.2", "--to", "1.5", "--steps", "4",
        )
        assert code == 0
        rows = [line.split(",") for line in out.strip().splitlines()[1:]]
        assert [row[1] for row in rows] == ["flow", "flow", "no_flow", "no_flow"]

        code, out, _ = run("verify", "--config", str(config))
        assert code == 0 and json.loads(out)["ok"] is True
        code, out, _ = run("verify", "--config", str(config), "--perturb-chi", "-0.001")
        assert code == 1 and "momentum_source" in json.loads(out)["failed"]

        broken = tmp_path / "broken.json"
        broken.write_text("{oops", encoding="utf-8")
        code, _, _ = run("solve", "--config", str(broken))
        assert code == 2

        inverted = tmp_path / "inverted.json"
        inverted.write_text(
            json.dumps({"h_l": 1.0, "u_l": 1.0, "b0": 0.5, "b1": 0.2}), encoding="utf-8"
        )
        code, _, _ = run("solve", "--config", str(inverted))
        assert code == 3
