"""Quasi-static quantum Otto cycle with an arbitrary nondegenerate spectrum.

The working medium starts thermal with the hot bath, its spectrum is slowly
deformed (populations frozen, no level crossing), it thermalizes with the
cold bath, and the spectrum is restored. Both post-deformation states are
passive but in general non-thermal; their adjacent virtual temperatures
carry the whole engine analysis: heats and work are gap-weighted tail sums
of the population difference, and the spectrum-only efficiency ceiling is
one minus the smallest gap-compression ratio.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import DiagonalState, EnergySpectrum, gibbs, mean_energy
from .errors import InvalidParams
from .majorization import SLACK, partial_sum_deficits
from .virtual_temp import VtProfile, adjacent_profile


@dataclass(frozen=True)
class OttoSpec:
    """Cycle specification: spectrum at the hot end of the first stroke,
    spectrum at the cold end, and the two bath temperatures."""

    spectrum_h: EnergySpectrum
    spectrum_c: EnergySpectrum
    t_hot: float
    t_cold: float

    def __post_init__(self):
        if self.spectrum_h.n != self.spectrum_c.n:
            raise InvalidParams(
                f"spectra must have the same level count: "
                f"{self.spectrum_h.n} != {self.spectrum_c.n}"
            )
        if not (self.t_hot > self.t_cold > 0.0):
            raise InvalidParams(
                f"need t_hot > t_cold > 0, got t_hot={self.t_hot}, t_cold={self.t_cold}"
            )

    @property
    def gap_ratios(self) -> tuple[float, ...]:
        """Per-gap compression ratios (end over start of the first stroke)."""
        return tuple(
            gc / gh for gc, gh in zip(self.spectrum_c.gaps, self.spectrum_h.gaps)
        )


@dataclass(frozen=True)
class OttoReport:
    """Everything one cycle produces.

    ``efficiency`` is None when no heat is absorbed from the hot bath.
    ``is_engine`` certifies the regime in which the whole chain
    0 <= efficiency <= efficiency_ub <= carnot is guaranteed: heat in at the
    hot bath, heat out at the cold bath, non-negative work, the cold
    equilibrium distribution majorizing the hot one, and the post-stroke
    minimum virtual temperature not below the cold bath.
    """

    q_hot: float
    q_cold: float
    work: float
    efficiency: float | None
    efficiency_ub: float
    carnot: float
    deficits: tuple[float, ...]
    passive_after_stroke1: DiagonalState
    passive_after_stroke2: DiagonalState
    t_min_stroke1: float
    t_max_stroke2: float
    is_engine: bool


@dataclass(frozen=True)
class EngineDiagnostics:
    """Individual operating-regime flags for one cycle specification."""

    cold_majorizes_hot: bool
    deficits: tuple[float, ...]
    tmin_above_cold: bool
    has_shrinking_gap: bool
    efficiency_below_carnot: bool | None
    carnot: float
    is_engine: bool


# Tolerance for the internal agreement check between the gap-weighted and
# direct-level-sum heat evaluations (an exact identity up to round-off).
_HEAT_IDENTITY_TOL = 1e-12


def heats_via_levels(spec: OttoSpec) -> tuple[float, float]:
    """Hot and cold heats as direct level sums over the population change."""
    p = gibbs(spec.spectrum_h, spec.t_hot).probs
    pc = gibbs(spec.spectrum_c, spec.t_cold).probs
    q_hot = math.fsum(e * (a - b) for e, a, b in zip(spec.spectrum_h.levels, p, pc))
    q_cold = -math.fsum(e * (a - b) for e, a, b in zip(spec.spectrum_c.levels, p, pc))
    return q_hot, q_cold


def run_cycle(spec: OttoSpec) -> OttoReport:
    """Evaluate one quasi-static cycle.

    Heats are computed from gap-weighted tail sums of the population
    difference and cross-checked against the direct level sums; the two are
    algebraically identical, so a disagreement beyond round-off means a bug
    and raises.
    """
    pop_hot = gibbs(spec.spectrum_h, spec.t_hot)
    pop_cold = gibbs(spec.spectrum_c, spec.t_cold)
    report = partial_sum_deficits(pop_hot, pop_cold)
    deficits = report.deficits

    q_hot = math.fsum(g * m for g, m in zip(spec.spectrum_h.gaps, deficits))
    q_cold = -math.fsum(g * m for g, m in zip(spec.spectrum_c.gaps, deficits))
    q_hot_direct, q_cold_direct = heats_via_levels(spec)
    for via_gaps, direct, name in (
        (q_hot, q_hot_direct, "hot"),
        (q_cold, q_cold_direct, "cold"),
    ):
        if abs(via_gaps - direct) > _HEAT_IDENTITY_TOL * max(1.0, abs(direct)):
            raise ArithmeticError(
                f"{name}-heat identity violated: {via_gaps} vs {direct}"
            )
    work = q_hot + q_cold

    after_stroke1 = DiagonalState(spec.spectrum_c, pop_hot)
    after_stroke2 = DiagonalState(spec.spectrum_h, pop_cold)
    t_min_stroke1 = adjacent_profile(after_stroke1).t_min
    t_max_stroke2 = adjacent_profile(after_stroke2).t_max

    efficiency = work / q_hot if q_hot > 0.0 else None
    efficiency_ub = 1.0 - min(spec.gap_ratios)
    carnot = 1.0 - spec.t_cold / spec.t_hot
    is_engine = (
        report.holds
        and q_hot > 0.0
        and q_cold <= 0.0
        and work >= 0.0
        and t_min_stroke1 >= spec.t_cold
    )
    return OttoReport(
        q_hot=q_hot,
        q_cold=q_cold,
        work=work,
        efficiency=efficiency,
        efficiency_ub=efficiency_ub,
        carnot=carnot,
        deficits=deficits,
        passive_after_stroke1=after_stroke1,
        passive_after_stroke2=after_stroke2,
        t_min_stroke1=t_min_stroke1,
        t_max_stroke2=t_max_stroke2,
        is_engine=is_engine,
    )


def intermediate_passive_states(
    spec: OttoSpec,
) -> tuple[DiagonalState, VtProfile, DiagonalState, VtProfile]:
    """The two post-deformation passive states and their profiles.

    Populations ride through each deformation unchanged, so the first state
    pairs the hot thermal populations with the deformed spectrum and the
    second pairs the cold thermal populations with the restored one. Their
    adjacent virtual temperatures are the bath temperatures rescaled by the
    per-gap compression ratios.
    """
    state1 = DiagonalState(spec.spectrum_c, gibbs(spec.spectrum_h, spec.t_hot))
    state2 = DiagonalState(spec.spectrum_h, gibbs(spec.spectrum_c, spec.t_cold))
    return state1, adjacent_profile(state1), state2, adjacent_profile(state2)


def engine_diagnostics(spec: OttoSpec) -> EngineDiagnostics:
    """Operating-regime flags: majorization, sufficient cold-heat condition,
    gap shrinkage, and Carnot compliance."""
    report = run_cycle(spec)
    efficiency_below_carnot = None
    if report.efficiency is not None:
        efficiency_below_carnot = report.efficiency <= report.carnot + SLACK
    return EngineDiagnostics(
        cold_majorizes_hot=all(m >= -SLACK for m in report.deficits),
        deficits=report.deficits,
        tmin_above_cold=report.t_min_stroke1 > spec.t_cold,
        has_shrinking_gap=any(r < 1.0 for r in spec.gap_ratios),
        efficiency_below_carnot=efficiency_below_carnot,
        carnot=report.carnot,
        is_engine=report.is_engine,
    )


__all__ = [
    "OttoSpec",
    "OttoReport",
    "EngineDiagnostics",
    "heats_via_levels",
    "run_cycle",
    "intermediate_passive_states",
    "engine_diagnostics",
]
