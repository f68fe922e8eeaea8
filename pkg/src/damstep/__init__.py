"""Semi-analytic dam-break solver for shallow water over a bed step.

The library builds the self-similar wave pattern of a dam-break onto a dry,
elevated bed: a backward shock, a standing connection across the step
selected by maximal energy dissipation, and a rarefaction fan running out
into vacuum — or a no-flow verdict when the step is too high.
"""

from .connection import (
    Branch,
    Connection,
    downstream_candidates,
    entropy_ok,
    jump_energy_production,
    optimal_connection,
    strip_bound,
    strip_depth,
)
from .core import (
    BedStep,
    EnergyPair,
    State,
    energy_density,
    energy_flux,
    energy_pair,
    froude,
)
from .damsolver import (
    DamProblem,
    DamSolution,
    FeasibleInterval,
    NoFlow,
    NoFlowReason,
    entropy_excess,
    entropy_threshold,
    solve_dam,
    stagnation_depth,
    total_energy_production,
    upstream_from_depth,
)
from .errors import DomainError, EmptyFeasibleRegion, NoEntropicConnection
from .leftwaves import LeftWavePattern, PatternKind, classify_left, min_upstream_depth, s1_velocity
from .sampler import SamplePoint, region_speeds, sample, shadow_profile
from .verify import ResidualReport, check_connection, check_solution, grid_min_E, mass_balance
from .wavecurves import (
    char_speeds,
    fan_invariant,
    fan_state,
    hugoniot_u,
    rarefaction_u,
    shock_speed,
)

__version__ = "0.1.0"

__all__ = [
    "BedStep",
    "Branch",
    "Connection",
    "DamProblem",
    "DamSolution",
    "DomainError",
    "EmptyFeasibleRegion",
    "EnergyPair",
    "FeasibleInterval",
    "LeftWavePattern",
    "NoEntropicConnection",
    "NoFlow",
    "NoFlowReason",
    "PatternKind",
    "ResidualReport",
    "SamplePoint",
    "State",
    "char_speeds",
    "check_connection",
    "check_solution",
    "classify_left",
    "downstream_candidates",
    "energy_density",
    "energy_flux",
    "energy_pair",
    "entropy_excess",
    "entropy_ok",
    "entropy_threshold",
    "fan_invariant",
    "fan_state",
    "froude",
    "grid_min_E",
    "hugoniot_u",
    "jump_energy_production",
    "mass_balance",
    "min_upstream_depth",
    "optimal_connection",
    "rarefaction_u",
    "region_speeds",
    "s1_velocity",
    "sample",
    "shadow_profile",
    "shock_speed",
    "solve_dam",
    "stagnation_depth",
    "strip_bound",
    "strip_depth",
    "total_energy_production",
    "upstream_from_depth",
]
