"""States, bed geometry and the shallow-water energy pair.

Depth/velocity states live on either side of a bed elevation jump.  The
energy density and its flux are the quantities the admissibility machinery
dissipates; both are evaluated exactly as polynomials in (h, u) for a given
bed level, with gravity always an explicit parameter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError

#: default gravitational acceleration, m/s^2
G_DEFAULT = 9.81


def cbrt(x: float) -> float:
    """Signed real cube root (math.cbrt is 3.11+)."""
    return x ** (1.0 / 3.0) if x >= 0 else -((-x) ** (1.0 / 3.0))


@dataclass(frozen=True)
class State:
    """Flow depth h [m] and velocity u [m/s] at a point.

    h == 0 is the dry bed (vacuum); the velocity is stored as 0 there by
    convention.
    """

    h: float
    u: float = 0.0

    def __post_init__(self):
        if self.h < 0:
            raise DomainError(f"negative depth h={self.h}")
        if self.h == 0 and self.u != 0.0:
            object.__setattr__(self, "u", 0.0)

    @property
    def is_vacuum(self) -> bool:
        return self.h == 0


@dataclass(frozen=True)
class BedStep:
    """Bed levels left/right of x = 0, rising in the flow direction.

    The dam orientation b1 > b0 is required; a bed drop is out of scope.
    """

    b0: float
    b1: float
    g: float = G_DEFAULT

    def __post_init__(self):
        if not self.b1 > self.b0:
            raise DomainError(f"bed step must rise: b1={self.b1} <= b0={self.b0}")
        if not self.g > 0:
            raise DomainError(f"gravity must be positive, got {self.g}")

    @property
    def jump(self) -> float:
        """Step height b1 - b0 > 0."""
        return self.b1 - self.b0


class EnergyPair(NamedTuple):
    eta: float
    q: float


def energy_density(s: State, b: float, g: float = G_DEFAULT) -> float:
    """Energy per unit width, density factored out: h u^2/2 + g h^2/2 + b h."""
    return s.h * s.u * s.u / 2 + g * s.h * s.h / 2 + b * s.h


def energy_flux(s: State, b: float, g: float = G_DEFAULT) -> float:
    """Flux of the energy density: g u h (h + b) + h u^3 / 2."""
    return g * s.u * s.h * (s.h + b) + s.h * s.u ** 3 / 2


def energy_pair(s: State, b: float, g: float = G_DEFAULT) -> EnergyPair:
    return EnergyPair(energy_density(s, b, g), energy_flux(s, b, g))


def froude(s: State, g: float = G_DEFAULT) -> float:
    """u / sqrt(g h).  Undefined (raises) on the dry bed."""
    if s.h <= 0:
        raise DomainError("Froude number undefined at vacuum")
    return s.u / math.sqrt(g * s.h)
