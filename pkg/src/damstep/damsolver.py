"""Decision procedure for the dam-break problem with a dry downstream bed.

Feasible upstream depths h0 run from the smallest one whose backward shock
does not advance (min_upstream_depth) up to the stagnation depth where the
flow behind the shock comes to rest.  Over that interval the total energy
production E(h0) of the composite solution — backward shock, standing
connection, rarefaction fan into vacuum — is minimized across the two
candidate downstream choices; the winner determines the full wave pattern.
If even the stagnation depth cannot clear the step, nothing passes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, NamedTuple

import numpy as np

from . import connection as conn_mod
from . import cubic, leftwaves
from .connection import Branch, Connection
from .core import BedStep, State, cbrt
from .errors import DomainError

#: absolute tolerance separating the no-flow regimes from flowing ones
REST_TOL = 1e-10

_SCAN_POINTS = 1024
_INV_PHI = (math.sqrt(5) - 1) / 2


@dataclass(frozen=True)
class DamProblem:
    """Left feed state (h_l > 0, u_l > 0) against a dry bed beyond the step."""

    left: State
    step: BedStep

    def __post_init__(self):
        if self.left.h <= 0:
            raise DomainError("dam problem requires a wet left state")
        if self.left.u <= 0:
            raise DomainError("dam problem requires inflow toward the step (u_l > 0)")


class FeasibleInterval(NamedTuple):
    h_tilde: float
    h_under: float
    h_hat: float | None


class NoFlowReason(Enum):
    JUMP_EXCEEDS_HBAR = "jump_exceeds_hbar"
    REST_STATE = "rest_state"


@dataclass(frozen=True)
class NoFlow:
    reason: NoFlowReason
    h_under: float


@dataclass(frozen=True)
class DamSolution:
    """Full wave structure of a flowing solution.

    The pattern is: constant (h_l, u_l) for x < c1 t, then (h0, u0) up to
    the step at x = 0, the standing connection, (h1, u1), a family-1 fan,
    and vacuum beyond the dry front at speed u_m.  ``u_m_alt`` is the
    single-sqrt variant u1 + sqrt(g h1) of the front speed, kept as a
    diagnostic next to the invariant-consistent u_m = u1 + 2 sqrt(g h1).
    """

    problem: DamProblem
    h0: float
    u0: float
    c1: float
    conn: Connection
    u_m: float
    u_m_alt: float
    branch: str  # "M1" | "M2"
    E_value: float
    m1: float
    m2: float | None
    tie: bool
    interval: FeasibleInterval


def upstream_from_depth(
    h0: float, h_l: float, u_l: float, g: float
) -> tuple[float, float]:
    """(u0, c1) behind a backward shock of depth h0 >= h_l through (h_l, u_l).

    u0 = u_l - sqrt(g/2 (1/h0 + 1/h_l)) (h0 - h_l) and c1 is the same
    expression with (h0 - h_l) replaced by h0.  Both decrease with h0.
    """
    if h_l <= 0 or h0 <= 0:
        raise DomainError("depths must be positive")
    if h0 < h_l * (1 - 1e-12):
        raise DomainError(f"upstream depth {h0} below the feed depth {h_l}")
    slope = math.sqrt(g / 2 * (1 / h0 + 1 / h_l))
    return u_l - slope * (h0 - h_l), u_l - slope * h0


def stagnation_depth(h_l: float, u_l: float, g: float) -> float:
    """Depth at which the flow behind the backward shock comes to rest.

    Largest root of h^3 - h_l h^2 - (h_l^2 + (2/g) u_l^2 h_l) h + h_l^3;
    the sign pattern (positive at 0, negative at h_l) guarantees one root
    beyond h_l.
    """
    if h_l <= 0 or u_l <= 0:
        raise DomainError("stagnation depth requires h_l > 0 and u_l > 0")
    # as u_l -> 0 the root merges with h_l; search slightly below so the
    # rounded double root at h_l is not lost, then clamp back
    lo = h_l - 1e-9 * max(1.0, h_l)
    root = cubic.largest_root_above(
        1.0, -h_l, -(h_l * h_l + 2 / g * u_l * u_l * h_l), h_l ** 3, lo
    )
    assert root is not None  # guaranteed by the sign bracket
    return max(root, h_l)


def entropy_excess(h0: float, h_l: float, u_l: float, step: BedStep) -> float:
    """Positive when the critical-outflow depth exceeds the allowed surface
    drop h0 - [b], i.e. the drop condition fails on the cube-root choice."""
    u0, _ = upstream_from_depth(h0, h_l, u_l, step.g)
    return cbrt(h0 * h0 * u0 * u0 / step.g) - h0 + step.jump


def entropy_threshold(
    h_l: float, u_l: float, step: BedStep
) -> tuple[Callable[[float], float], float | None]:
    """(excess evaluator, threshold depth).

    The threshold is the unique depth where the excess changes sign: above
    it the cube-root choice honors the drop condition.  None when the
    excess is already nonpositive at the bottom of the feasible interval
    (condition holds everywhere) or never becomes nonpositive (no flow).
    The excess decreases over the interval, so bisection is exact.
    """
    lo = leftwaves.min_upstream_depth(h_l, u_l, step.g)
    hi = stagnation_depth(h_l, u_l, step.g)

    def excess(h0: float) -> float:
        return entropy_excess(h0, h_l, u_l, step)

    # the cube root amplifies roundoff of u0(hi) ~ 0 to ~1e-11, so "sign
    # change present" is decided with a matching slack
    if excess(lo) <= 0 or excess(hi) > 1e-9 * max(1.0, step.jump):
        return excess, None
    a, b = lo, hi
    while b - a > 1e-13:
        mid = 0.5 * (a + b)
        if excess(mid) > 0:
            a = mid
        else:
            b = mid
    return excess, 0.5 * (a + b)


def _production(h0, problem: DamProblem, cube: bool):
    """E(h0) for scalar or ndarray h0; no feasibility checks."""
    step = problem.step
    g = step.g
    h_l, u_l = problem.left.h, problem.left.u
    slope = np.sqrt(g / 2 * (1.0 / h0 + 1.0 / h_l))
    u0 = u_l - slope * (h0 - h_l)
    c1 = u_l - slope * h0
    q = h0 * u0
    if cube:
        h1 = np.cbrt(q * q / g)
    else:
        h1 = h0 - step.jump
    eta0 = h0 * u0 * u0 / 2 + g * h0 * h0 / 2 + step.b0 * h0
    eta_l = h_l * u_l * u_l / 2 + g * h_l * h_l / 2 + step.b0 * h_l
    with np.errstate(divide="ignore", invalid="ignore"):
        outflow = np.where(
            q * q > 0, g * q * (h1 + step.b1) + q ** 3 / (2 * h1 * h1), 0.0
        )
    return -c1 * (eta0 - eta_l) + outflow


def total_energy_production(h0: float, branch: Branch, problem: DamProblem) -> float:
    """E(h0) = -c1 (eta(h0,u0) - eta(h_l,u_l)) + h1 u1 (u1^2/2 + g (h1+b1))
    with h1 chosen per ``branch``.

    Feasibility beyond depth validity (the drop condition, the saturated
    window) is the selector's business, not this evaluator's.
    """
    h_l, u_l = problem.left.h, problem.left.u
    g = problem.step.g
    lo = leftwaves.min_upstream_depth(h_l, u_l, g)
    hi = stagnation_depth(h_l, u_l, g)
    tol = 1e-9 * max(1.0, hi)
    if not lo - tol <= h0 <= hi + tol:
        raise DomainError(f"h0={h0} outside the feasible interval [{lo}, {hi}]")
    if branch is Branch.ENTROPY_SATURATED and h0 - problem.step.jump <= 0:
        raise DomainError("saturated choice needs h0 above the step height")
    return float(_production(np.float64(h0), problem, branch is Branch.CUBE_ROOT))


def _golden_min(f: Callable[[float], float], a: float, b: float) -> tuple[float, float]:
    """Argmin of a unimodal f on [a, b] by golden-section search."""
    tol = 1e-12 * max(1.0, abs(b))
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def _minimize(problem: DamProblem, lo: float, hi: float, cube: bool) -> tuple[float, float]:
    """Coarse scan plus golden refinement of E over [lo, hi]."""
    if hi <= lo:
        return lo, float(_production(np.float64(lo), problem, cube))
    grid = np.linspace(lo, hi, _SCAN_POINTS)
    values = _production(grid, problem, cube)
    i = int(np.argmin(values))
    a = float(grid[max(i - 1, 0)])
    b = float(grid[min(i + 1, _SCAN_POINTS - 1)])

    def f(x: float) -> float:
        return float(_production(np.float64(x), problem, cube))

    h_best, e_best = _golden_min(f, a, b)
    if values[i] < e_best:
        return float(grid[i]), float(values[i])
    return h_best, e_best


def _saturated_floor(problem: DamProblem, lo: float, hi: float) -> float | None:
    """Lowest depth in [lo, hi] where the saturated choice admits a strip.

    The window requires u0^2 <= g h0 and [b]/h0 <= (3 - sqrt(1+8y))/2; the
    combined margin increases with h0, so the window is [floor, hi] or
    empty (None).
    """
    step = problem.step
    h_l, u_l = problem.left.h, problem.left.u

    def margin(h0: float) -> float:
        u0, _ = upstream_from_depth(h0, h_l, u_l, step.g)
        y = u0 * u0 / (step.g * h0)
        return min(1.0 - y, (3.0 - math.sqrt(1 + 8 * y)) / 2.0 - step.jump / h0)

    if margin(hi) < 0:
        return None
    if margin(lo) >= 0:
        return lo
    a, b = lo, hi
    while b - a > 1e-13:
        mid = 0.5 * (a + b)
        if margin(mid) < 0:
            a = mid
        else:
            b = mid
    return b


def solve_dam(problem: DamProblem) -> DamSolution | NoFlow:
    """Solve the dam-break problem: either the full flowing wave pattern or
    a NoFlow verdict.

    The step blocks the flow when the stagnation depth falls short of the
    step height; equality (within REST_TOL) leaves still water of exactly
    that depth behind the step.  Otherwise E is minimized on the cube-root
    choice over the part of the interval honoring the drop condition (M1,
    always nonempty) and on the saturated choice over its admissible window
    (M2, possibly empty); the smaller wins, ties go to M1 and are flagged.
    """
    step = problem.step
    g = step.g
    h_l, u_l = problem.left.h, problem.left.u

    h_under = stagnation_depth(h_l, u_l, g)
    if h_under < step.jump - REST_TOL:
        return NoFlow(NoFlowReason.JUMP_EXCEEDS_HBAR, h_under)
    if abs(h_under - step.jump) <= REST_TOL:
        return NoFlow(NoFlowReason.REST_STATE, h_under)

    h_tilde = leftwaves.min_upstream_depth(h_l, u_l, g)
    _, h_hat = entropy_threshold(h_l, u_l, step)
    interval = FeasibleInterval(h_tilde, h_under, h_hat)

    lo1 = h_hat if h_hat is not None else h_tilde
    h_m, m1 = _minimize(problem, lo1, h_under, cube=True)

    h_n: float | None = None
    m2: float | None = None
    if h_hat is not None:
        lo2 = _saturated_floor(problem, h_tilde, h_hat)
        if lo2 is not None:
            h_n, m2 = _minimize(problem, lo2, h_hat, cube=False)

    if m2 is not None and m2 < m1:
        h0, e_value, branch_name, cube = h_n, m2, "M2", False
    else:
        h0, e_value, branch_name, cube = h_m, m1, "M1", True
    tie = m2 is not None and abs(m1 - m2) <= 1e-9 * max(1.0, abs(m1))

    u0, c1 = upstream_from_depth(h0, h_l, u_l, g)
    u0 = max(u0, 0.0)  # roundoff guard at the stagnation end
    conn = conn_mod.optimal_connection(h0, u0, step)
    expected_h1 = cbrt(h0 * h0 * u0 * u0 / g) if cube else h0 - step.jump
    assert abs(conn.right.h - expected_h1) <= 1e-9 * max(1.0, expected_h1)

    h1, u1 = conn.right.h, conn.right.u
    u_m = u1 + 2 * math.sqrt(g * h1)
    u_m_alt = u1 + math.sqrt(g * h1)
    return DamSolution(
        problem=problem,
        h0=h0,
        u0=u0,
        c1=c1,
        conn=conn,
        u_m=u_m,
        u_m_alt=u_m_alt,
        branch=branch_name,
        E_value=e_value,
        m1=m1,
        m2=m2,
        tie=tie,
        interval=interval,
    )
