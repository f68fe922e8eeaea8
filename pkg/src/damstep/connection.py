"""The stationary connection across the bed step.

A zero-speed strip of depth chi links the upstream state (h0, u0) at x = 0-
to the downstream state (h1, u1) at x = 0+.  Mass flux is continuous
(h1 u1 = h0 u0), the momentum jump is balanced by the bed source through
chi, and among all admissible downstream depths the one minimizing the
local energy production is selected, subject to the free-surface drop
condition h1 + b1 <= h0 + b0.

The minimizer is the critical-outflow depth (h0^2 u0^2 / g)^(1/3) whenever
it honors the drop condition; otherwise the drop condition saturates, the
downstream depth is h0 - (b1 - b0), and the choice is admissible only when
u0^2 <= g h0 and the step is small enough relative to h0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from . import cubic
from .core import BedStep, State, cbrt, energy_flux
from .errors import DomainError, EmptyFeasibleRegion, NoEntropicConnection

#: slack for the free-surface drop condition h1 + b1 <= h0 + b0
ENTROPY_TOL = 1e-12


class Branch(Enum):
    """Which downstream depth the connection selected."""

    CUBE_ROOT = "cube_root"
    ENTROPY_SATURATED = "entropy_saturated"


@dataclass(frozen=True)
class Connection:
    left: State
    right: State
    chi: float
    branch: Branch
    step: BedStep


class StripBound(NamedTuple):
    chi_bar: float
    y: float


def strip_depth(h0: float, u0: float, h1: float, step: BedStep) -> float:
    """Strip depth chi balancing the momentum jump against the bed source.

    chi = ((1 + 2y) h0^2 - h1^2 - 2y h0^3/h1) / (2 [b]) with y = u0^2/(g h0);
    the value may be negative, in which case no strip with that downstream
    depth exists and the caller decides what to do.
    """
    if h0 <= 0 or h1 <= 0:
        raise DomainError("strip depth requires positive depths on both sides")
    y = u0 * u0 / (step.g * h0)
    return ((1 + 2 * y) * h0 * h0 - h1 * h1 - 2 * y * h0 ** 3 / h1) / (2 * step.jump)


def strip_bound(h0: float, u0: float, step: BedStep) -> StripBound:
    """Largest admissible strip depth.

    chi_bar = h0^2 (1 + 2y - 3 y^(2/3)) / (2 [b]) >= 0, vanishing exactly at
    critical inflow y = 1.
    """
    if h0 <= 0:
        raise DomainError("strip bound requires a positive upstream depth")
    y = u0 * u0 / (step.g * h0)
    fy = 1 + 2 * y - 3 * cbrt(y * y)
    # fy >= 0 analytically; clamp roundoff at y ~ 1
    return StripBound(h0 * h0 * max(fy, 0.0) / (2 * step.jump), y)


def downstream_candidates(h0: float, u0: float, step: BedStep, chi: float) -> list[float]:
    """Positive downstream depths compatible with strip depth chi, ascending.

    Roots of h1^3 - A h1 + B = 0 with A = h0^2 + (2/g) h0 u0^2 - 2 [b] chi
    and B = 2 h0^2 u0^2 / g.  Above the strip bound no positive root exists.
    """
    if h0 <= 0:
        raise DomainError("downstream candidates require a positive upstream depth")
    if chi < 0:
        raise DomainError(f"strip depth must be nonnegative, got {chi}")
    bound = strip_bound(h0, u0, step).chi_bar
    if chi > bound * (1 + 1e-12) + 1e-12:
        raise EmptyFeasibleRegion(f"strip depth {chi} exceeds its bound {bound}")
    g = step.g
    a_coef = h0 * h0 + 2 / g * h0 * u0 * u0 - 2 * step.jump * chi
    if u0 == 0:
        # the cubic loses its constant term: h1 (h1^2 - A) = 0
        return [math.sqrt(a_coef)] if a_coef > 0 else []
    b_coef = 2 * h0 * h0 * u0 * u0 / g
    roots = cubic.real_roots(1.0, 0.0, -a_coef, b_coef)
    return [x for x in roots if x > 0]


def entropy_ok(h0: float, h1: float, step: BedStep) -> bool:
    """Free-surface drop condition h1 + b1 <= h0 + b0, with equality slack."""
    return h1 <= h0 - step.jump + ENTROPY_TOL


def optimal_connection(h0: float, u0: float, step: BedStep) -> Connection:
    """The connection through (h0, u0) minimizing local energy production.

    Selects the critical-outflow downstream depth when the drop condition
    allows it (exact ties included), else saturates the drop condition;
    raises NoEntropicConnection when neither choice is admissible.  The
    degenerate input u0 = 0 returns the continuous limit: a dry downstream
    side held back by a strip of depth h0^2 / (2 [b]).
    """
    g = step.g
    jump = step.jump
    if h0 <= 0:
        raise DomainError("connection requires a positive upstream depth")
    if u0 < 0:
        raise DomainError("connection requires a non-negative upstream velocity")

    if u0 == 0:
        if h0 < jump:
            raise NoEntropicConnection(
                f"still water of depth {h0} cannot clear a step of height {jump}"
            )
        chi = h0 * h0 / (2 * jump)
        return Connection(State(h0, 0.0), State(0.0, 0.0), chi, Branch.CUBE_ROOT, step)

    h1_crit = cbrt(h0 * h0 * u0 * u0 / g)
    if entropy_ok(h0, h1_crit, step):
        h1, branch = h1_crit, Branch.CUBE_ROOT
    else:
        y = u0 * u0 / (g * h0)
        if y > 1 + 1e-12 or jump > h0 * (3 - math.sqrt(1 + 8 * y)) / 2 + 1e-12:
            raise NoEntropicConnection(
                f"no admissible connection: h0={h0}, u0={u0}, step height {jump}"
            )
        h1, branch = h0 - jump, Branch.ENTROPY_SATURATED

    u1 = h0 * u0 / h1
    chi = strip_depth(h0, u0, h1, step)
    bound = strip_bound(h0, u0, step).chi_bar
    if chi < -1e-9 * max(1.0, bound) or chi > bound * (1 + 1e-9) + 1e-12:
        raise DomainError(
            f"strip depth {chi} escaped its admissible range [0, {bound}]"
        )
    chi = min(max(chi, 0.0), bound)
    return Connection(State(h0, u0), State(h1, u1), chi, branch, step)


def jump_energy_production(conn: Connection) -> float:
    """Local energy production of the standing strip: the energy-flux jump
    Q(right; b1) - Q(left; b0)."""
    return energy_flux(conn.right, conn.step.b1, conn.step.g) - energy_flux(
        conn.left, conn.step.b0, conn.step.g
    )
