"""Elementary waves of the flat-bed shallow-water system.

Characteristic speeds, Hugoniot loci with their shock speeds, rarefaction
loci in Riemann-invariant form (u +/- 2 sqrt(gh) constant), and pointwise
evaluation inside a centered rarefaction fan.

Conventions: family 1 carries u - sqrt(gh), family 2 carries u + sqrt(gh).
A 1-shock compresses (h > h_left), a 1-rarefaction expands (h < h_left);
family 2 mirrors both.  Zero-strength waves (h == h_left) are accepted on
either locus so composite constructions degrade gracefully.
"""

from __future__ import annotations

import math

from .core import G_DEFAULT, State
from .errors import DomainError

#: tolerance for accepting a zero-strength wave at the locus boundary
BOUNDARY_TOL = 1e-12


def _check_family(family: int) -> None:
    if family not in (1, 2):
        raise DomainError(f"wave family must be 1 or 2, got {family}")


def char_speeds(s: State, g: float = G_DEFAULT) -> tuple[float, float]:
    """(lambda_1, lambda_2) = (u - sqrt(gh), u + sqrt(gh))."""
    c = math.sqrt(g * s.h)
    return s.u - c, s.u + c


def _shock_side_ok(family: int, h: float, h_left: float) -> bool:
    tol = BOUNDARY_TOL * max(1.0, h_left)
    if family == 1:
        return h >= h_left - tol
    return h <= h_left + tol


def hugoniot_u(family: int, h: float, left: State, g: float = G_DEFAULT) -> float:
    """Velocity on the family-``family`` shock locus through ``left`` at depth h.

    u = u_left -/+ sqrt(g/2 (1/h + 1/h_left)) (h - h_left), minus for
    family 1 (h > h_left), plus for family 2 (h < h_left).
    """
    _check_family(family)
    if h <= 0 or left.h <= 0:
        raise DomainError("shock locus requires positive depths")
    if not _shock_side_ok(family, h, left.h):
        raise DomainError(
            f"depth {h} on the wrong side of the family-{family} locus through h={left.h}"
        )
    slope = math.sqrt(g / 2 * (1 / h + 1 / left.h))
    if family == 1:
        return left.u - slope * (h - left.h)
    return left.u + slope * (h - left.h)


def shock_speed(family: int, h: float, left: State, g: float = G_DEFAULT) -> float:
    """Rankine-Hugoniot speed of the shock joining ``left`` to depth h."""
    _check_family(family)
    if h <= 0 or left.h <= 0:
        raise DomainError("shock speed requires positive depths")
    if not _shock_side_ok(family, h, left.h):
        raise DomainError(
            f"depth {h} on the wrong side of the family-{family} locus through h={left.h}"
        )
    speed = math.sqrt(g * (h + left.h) * h / (2 * left.h))
    return left.u - speed if family == 1 else left.u + speed


def rarefaction_u(family: int, h: float, left: State, g: float = G_DEFAULT) -> float:
    """Velocity on the rarefaction locus: the family invariant is constant.

    Family 1: u = u_left + 2 (sqrt(g h_left) - sqrt(g h)), h <= h_left.
    Family 2: u = u_left - 2 (sqrt(g h_left) - sqrt(g h)), h >= h_left.
    """
    _check_family(family)
    if h < 0 or left.h <= 0:
        raise DomainError("rarefaction locus requires h >= 0 and a wet left state")
    tol = BOUNDARY_TOL * max(1.0, left.h)
    if family == 1 and h > left.h + tol:
        raise DomainError("family-1 rarefactions expand: need h <= h_left")
    if family == 2 and h < left.h - tol:
        raise DomainError("family-2 rarefactions need h >= h_left")
    gap = 2 * (math.sqrt(g * left.h) - math.sqrt(g * h))
    return left.u + gap if family == 1 else left.u - gap


def fan_invariant(family: int, left: State, g: float = G_DEFAULT) -> float:
    """The Riemann invariant carried across the fan: u + 2 sqrt(gh) for
    family 1, u - 2 sqrt(gh) for family 2."""
    _check_family(family)
    c = 2 * math.sqrt(g * left.h)
    return left.u + c if family == 1 else left.u - c


def fan_state(family: int, xi: float, left: State, g: float = G_DEFAULT) -> State:
    """State inside the centered fan through ``left`` at similarity point xi.

    For family 1, u - sqrt(gh) = xi and u + 2 sqrt(gh) = J, so
    sqrt(gh) = (J - xi)/3 and u = (J + 2 xi)/3; the fan spans
    [lambda_1(left), J], the head xi = J being the dry edge.  Family 2 is
    the mirror image with sqrt(gh) = (xi - J)/3.
    """
    _check_family(family)
    if left.h <= 0:
        raise DomainError("fan evaluation requires a wet edge state")
    invariant = fan_invariant(family, left, g)
    lam1, lam2 = char_speeds(left, g)
    tol = 1e-10 * max(1.0, abs(invariant), math.sqrt(g * left.h))
    if family == 1:
        if xi < lam1 - tol or xi > invariant + tol:
            raise DomainError(f"xi={xi} outside the family-1 fan [{lam1}, {invariant}]")
        c = max(0.0, (invariant - xi) / 3)
    else:
        if xi < lam2 - tol:
            raise DomainError(f"xi={xi} below the family-2 fan foot {lam2}")
        c = max(0.0, (xi - invariant) / 3)
    h = c * c / g
    return State(h, (invariant + 2 * xi) / 3)
