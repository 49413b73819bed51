"""Direction of heat flow between a passive state and a thermal environment.

Environments at or below the minimum adjacent virtual temperature always
draw heat out of the system; at or above the maximum they always push heat
in. In between, the comparison of the environment temperature with the
state's effective (energy-matching) temperature decides. Since the thermal
mean energy is strictly increasing in temperature, that comparison is the
same thing as the sign of the thermalization energy difference, which is
what we evaluate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .core import DiagonalState, is_passive, mean_energy, thermal_mean_energy, uniform_mean_energy
from .errors import AllDegenerate, EquilibriumNoFlow, NotPassive
from .virtual_temp import adjacent_profile

#: |heat| below this fraction of the spectrum span counts as equilibrium.
EQUILIBRIUM_TOL = 1e-12


class HeatDirection(Enum):
    OUT_OF_SYSTEM = "out-of-system"
    INTO_SYSTEM = "into-system"


class HeatRule(Enum):
    BELOW_T_MIN = "below-t-min"
    ABOVE_T_MAX = "above-t-max"
    VIA_EFFECTIVE_TEMPERATURE = "via-effective-temperature"


@dataclass(frozen=True)
class HeatFlowVerdict:
    """Direction of thermalization heat, the rule that decided it, and the
    signed heat itself (positive = absorbed by the system)."""

    direction: HeatDirection
    rule: HeatRule
    heat: float

    def __post_init__(self):
        expected = HeatDirection.INTO_SYSTEM if self.heat > 0 else HeatDirection.OUT_OF_SYSTEM
        if self.direction is not expected:
            raise ValueError(f"direction {self.direction} contradicts heat {self.heat}")


def energy_bounds(state: DiagonalState) -> tuple[float, float, float]:
    """Thermal mean energies at the extremal adjacent virtual temperatures,
    bracketing the state's own mean energy: (u_min, u, u_max).

    When the maximum virtual temperature is infinite (a tied pair), the
    upper bound is the infinite-temperature limit, the uniform-mixture mean.
    """
    if not is_passive(state):
        raise NotPassive("energy bounds are defined for passive states")
    profile = adjacent_profile(state)
    u_min = thermal_mean_energy(state.spectrum, profile.t_min)
    if math.isinf(profile.t_max):
        u_max = uniform_mean_energy(state.spectrum)
    else:
        u_max = thermal_mean_energy(state.spectrum, profile.t_max)
    return u_min, mean_energy(state), u_max


def thermalization_heat(state: DiagonalState, t_env: float) -> float:
    """Energy gained by the state when fully thermalized at ``t_env``
    (negative when the state loses energy to the environment)."""
    return thermal_mean_energy(state.spectrum, t_env) - mean_energy(state)


def heat_flow_direction(state: DiagonalState, t_env: float) -> HeatFlowVerdict:
    """Classify the direction of heat flow on contact with an environment.

    Raises EquilibriumNoFlow when the environment temperature matches the
    state's effective temperature (no direction exists). A uniform
    population has every virtual temperature infinite, so every finite
    environment falls under the below-minimum rule, consistently with the
    uniform state having the largest mean energy of all passive states.
    """
    if not is_passive(state):
        raise NotPassive("heat-flow classification requires a passive state")
    heat = thermalization_heat(state, t_env)
    if abs(heat) <= EQUILIBRIUM_TOL * state.spectrum.span:
        raise EquilibriumNoFlow(
            f"environment temperature {t_env} matches the state's effective "
            "temperature; no flow direction exists"
        )
    try:
        profile = adjacent_profile(state)
        t_min, t_max = profile.t_min, profile.t_max
    except AllDegenerate:
        t_min = t_max = math.inf
    if t_env <= t_min:
        rule = HeatRule.BELOW_T_MIN
    elif t_env >= t_max:
        rule = HeatRule.ABOVE_T_MAX
    else:
        rule = HeatRule.VIA_EFFECTIVE_TEMPERATURE
    direction = HeatDirection.INTO_SYSTEM if heat > 0 else HeatDirection.OUT_OF_SYSTEM
    return HeatFlowVerdict(direction=direction, rule=rule, heat=heat)


__all__ = [
    "EQUILIBRIUM_TOL",
    "HeatDirection",
    "HeatRule",
    "HeatFlowVerdict",
    "energy_bounds",
    "thermalization_heat",
    "heat_flow_direction",
]
