"""Pointwise evaluation of the constructed solution.

``sample`` reads the self-similar wave pattern at (x, t); ``shadow_profile``
resolves the standing strip at a finite width epsilon*t, replacing the point
discontinuity at the step with the strip state and a linear bed ramp.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import wavecurves
from .damsolver import DamSolution
from .errors import DomainError


@dataclass(frozen=True)
class SamplePoint:
    h: float
    u: float
    b: float
    on_interface: bool = False


def region_speeds(sol: DamSolution) -> tuple[float, float, float]:
    """(c1, fan foot, fan head): the ordered breakpoints of the pattern,
    with the standing connection between c1 and the fan foot at speed 0."""
    g = sol.problem.step.g
    foot, _ = wavecurves.char_speeds(sol.conn.right, g)
    return sol.c1, foot, sol.u_m


def sample(sol: DamSolution, x: float, t: float) -> SamplePoint:
    """(h, u, b) at position x and time t > 0.

    x = 0 sits on the standing connection; the right limit is reported
    there and the point is flagged.
    """
    if t <= 0:
        raise DomainError("sampling requires t > 0")
    step = sol.problem.step
    c1, foot, head = region_speeds(sol)
    xi = x / t
    if xi < c1:
        left = sol.problem.left
        return SamplePoint(left.h, left.u, step.b0)
    if x < 0:
        return SamplePoint(sol.h0, sol.u0, step.b0)
    right = sol.conn.right
    if x == 0:
        return SamplePoint(right.h, right.u, step.b1, on_interface=True)
    if xi < foot:
        return SamplePoint(right.h, right.u, step.b1)
    if xi <= head:
        s = wavecurves.fan_state(1, xi, right, step.g)
        return SamplePoint(s.h, s.u, step.b1)
    return SamplePoint(0.0, 0.0, step.b1)


def shadow_profile(sol: DamSolution, epsilon: float, t: float, xs) -> np.ndarray:
    """Profile rows (x, h, u, b) with the strip resolved at width epsilon*t.

    Inside the half-open strip (-eps*t/2, eps*t/2] the depth is the strip
    depth, the velocity 0, and the bed ramps linearly from b0 to b1;
    outside, rows agree with ``sample``.
    """
    if epsilon <= 0:
        raise DomainError("strip width parameter must be positive")
    if t <= 0:
        raise DomainError("sampling requires t > 0")
    step = sol.problem.step
    half = epsilon * t / 2
    chi = sol.conn.chi
    xs = np.asarray(xs, dtype=float)
    rows = np.empty((xs.size, 4))
    for i, x in enumerate(xs):
        if -half < x <= half:
            bed = step.b0 + (x + half) / (2 * half) * step.jump
            rows[i] = (x, chi, 0.0, bed)
        else:
            p = sample(sol, float(x), t)
            rows[i] = (x, p.h, p.u, p.b)
    return rows
