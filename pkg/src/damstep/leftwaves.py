"""Admissible nonpositive-speed wave patterns to the left of the step.

For a feed state with u_l >= 0 the only patterns whose waves all run
leftward are a single backward shock, or a backward shock followed by a
family-2 rarefaction whose head still moves left.  Rarefaction-only
patterns would force the flow behind the step to speed up, which is ruled
out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import wavecurves
from .core import G_DEFAULT, State
from .errors import DomainError

#: slack applied on the classification boundaries, resolved toward S1_ONLY
EDGE_TOL = 1e-10


class PatternKind(Enum):
    S1_ONLY = "s1_only"
    S1_THEN_R2 = "s1_then_r2"
    NONE = "none"


@dataclass(frozen=True)
class LeftWavePattern:
    kind: PatternKind
    intermediate: State | None = None
    s1_speed: float | None = None


def min_upstream_depth(h_l: float, u_l: float, g: float = G_DEFAULT) -> float:
    """Smallest depth behind the step the left shock can sustain without
    running forward: h_l itself for z = u_l^2/(g h_l) <= 1, otherwise
    (h_l/2)(sqrt(1 + 8z) - 1), the depth where the shock speed changes sign.
    """
    if h_l <= 0:
        raise DomainError("left depth must be positive")
    z = u_l * u_l / (g * h_l)
    if z <= 1:
        return h_l
    return h_l * (math.sqrt(1 + 8 * z) - 1) / 2


def s1_velocity(h0: float, h_l: float, u_l: float, g: float = G_DEFAULT) -> float:
    """Velocity behind a backward shock of depth h0 >= h_l through (h_l, u_l)."""
    return wavecurves.hugoniot_u(1, h0, State(h_l, u_l), g)


def _intermediate_depth(left: State, h0: float, u0: float, g: float) -> float:
    # composite relation: shock to h*, then a family-2 fan up to (h0, u0);
    # monotone decreasing in h*, so bisect on [h_l, h0]
    def gap(h_star: float) -> float:
        u_star = wavecurves.hugoniot_u(1, h_star, left, g)
        return u_star + 2 * (math.sqrt(g * h0) - math.sqrt(g * h_star)) - u0

    a, b = left.h, h0
    for _ in range(200):
        mid = 0.5 * (a + b)
        if gap(mid) > 0:
            a = mid
        else:
            b = mid
        if b - a <= 1e-13 * max(1.0, h0):
            break
    return 0.5 * (a + b)


def classify_left(
    h_l: float, u_l: float, h0: float, u0: float, g: float = G_DEFAULT
) -> LeftWavePattern:
    """Decide which left-going pattern joins (h_l, u_l) to a given (h0, u0).

    S1_ONLY when (h0, u0) sits on the backward-shock locus and the shock
    speed is nonpositive; S1_THEN_R2 when u0 lies strictly between the
    shock-locus value and -sqrt(g h0); NONE otherwise.  Locus membership is
    tested within EDGE_TOL and boundary cases resolve toward S1_ONLY.
    """
    if u_l < 0:
        raise DomainError("left-going classification assumes u_l >= 0")
    if h_l <= 0 or h0 <= 0:
        raise DomainError("depths must be positive")
    left = State(h_l, u_l)
    floor = min_upstream_depth(h_l, u_l, g)
    tol_h = EDGE_TOL * max(1.0, h_l, h0)
    if h0 < max(h_l, floor) - tol_h:
        return LeftWavePattern(PatternKind.NONE)

    h_shock = max(h0, h_l)  # absorb roundoff below the zero-strength boundary
    u_s1 = wavecurves.hugoniot_u(1, h_shock, left, g)
    tol_u = EDGE_TOL * max(1.0, abs(u_l) + math.sqrt(g * h0))
    if abs(u0 - u_s1) <= tol_u:
        return LeftWavePattern(
            PatternKind.S1_ONLY,
            intermediate=None,
            s1_speed=wavecurves.shock_speed(1, h_shock, left, g),
        )

    if h0 > h_l + tol_h and u_s1 < u0 < -math.sqrt(g * h0):
        h_star = _intermediate_depth(left, h0, u0, g)
        u_star = wavecurves.hugoniot_u(1, h_star, left, g)
        return LeftWavePattern(
            PatternKind.S1_THEN_R2,
            intermediate=State(h_star, u_star),
            s1_speed=wavecurves.shock_speed(1, h_star, left, g),
        )
    return LeftWavePattern(PatternKind.NONE)
