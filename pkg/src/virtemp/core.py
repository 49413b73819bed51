"""Core value types and thermodynamic primitives.

Conventions: the Boltzmann constant is fixed to 1, so temperatures carry
energy units; entropies are in nats. All types are immutable after
construction and all operations are pure functions, so everything here is
safe to share freely between threads.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .errors import (
    EnergyOutOfRange,
    LengthMismatch,
    NonIncreasingLevels,
    NonPositiveProbability,
    NonPositiveTemperature,
    NotNormalized,
    StateFileError,
    TooFewLevels,
)

#: Populations must sum to one within this absolute tolerance; inputs outside
#: it are rejected rather than silently renormalized.
NORMALIZATION_TOL = 1e-12


@dataclass(frozen=True)
class EnergySpectrum:
    """Strictly increasing, nondegenerate energy levels E_1 < ... < E_n."""

    levels: tuple[float, ...]
    gaps: tuple[float, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        levels = tuple(float(e) for e in self.levels)
        if len(levels) < 2:
            raise TooFewLevels(f"need at least 2 levels, got {len(levels)}")
        for k in range(len(levels) - 1):
            if not levels[k] < levels[k + 1]:
                raise NonIncreasingLevels(
                    f"levels must be strictly increasing: "
                    f"E[{k + 1}]={levels[k + 1]} <= E[{k}]={levels[k]}"
                )
        object.__setattr__(self, "levels", levels)
        object.__setattr__(
            self, "gaps", tuple(levels[k + 1] - levels[k] for k in range(len(levels) - 1))
        )

    @property
    def n(self) -> int:
        return len(self.levels)

    @property
    def span(self) -> float:
        """Total width E_n - E_1 (used to scale energy tolerances)."""
        return self.levels[-1] - self.levels[0]


@dataclass(frozen=True)
class Population:
    """Normalized occupation probabilities with strictly positive entries.

    Strict positivity is required so that every virtual temperature built
    from log-ratios of entries stays finite or cleanly infinite; zero
    entries are rejected at construction.
    """

    probs: tuple[float, ...]

    def __post_init__(self):
        probs = tuple(float(p) for p in self.probs)
        for k, p in enumerate(probs):
            if not p > 0.0:
                raise NonPositiveProbability(f"probability p[{k}]={p} must be > 0")
        total = math.fsum(probs)
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise NotNormalized(
                f"probabilities sum to {total!r}, not 1 within {NORMALIZATION_TOL}"
            )
        object.__setattr__(self, "probs", probs)

    @property
    def n(self) -> int:
        return len(self.probs)


@dataclass(frozen=True)
class DiagonalState:
    """A state diagonal in the energy basis: spectrum plus matching population."""

    spectrum: EnergySpectrum
    population: Population

    def __post_init__(self):
        if self.spectrum.n != self.population.n:
            raise LengthMismatch(
                f"spectrum has {self.spectrum.n} levels but population has "
                f"{self.population.n} entries"
            )

    @property
    def n(self) -> int:
        return self.spectrum.n


def make_spectrum(levels: Iterable[float]) -> EnergySpectrum:
    """Validate raw energy levels and derive the adjacent gaps."""
    return EnergySpectrum(tuple(levels))


def make_state(levels: Iterable[float], probs: Iterable[float]) -> DiagonalState:
    """Build a DiagonalState from raw levels and probabilities."""
    return DiagonalState(make_spectrum(levels), Population(tuple(probs)))


def gibbs(spectrum: EnergySpectrum, t: float) -> Population:
    """Canonical (thermal) population at temperature ``t``.

    Energies are shifted by the ground level before exponentiating so the
    evaluation cannot overflow; the shift leaves the distribution unchanged.
    ``t = math.inf`` returns the uniform limit.
    """
    if not t > 0.0:
        raise NonPositiveTemperature(f"temperature must be > 0, got {t}")
    e0 = spectrum.levels[0]
    weights = [math.exp(-(e - e0) / t) for e in spectrum.levels]
    z = math.fsum(weights)
    return Population(tuple(w / z for w in weights))


def mean_energy(state: DiagonalState) -> float:
    """Mean energy sum_k E_k p_k."""
    return math.fsum(e * p for e, p in zip(state.spectrum.levels, state.population.probs))


def entropy(pop: Population) -> float:
    """Shannon entropy -sum_k p_k ln p_k in nats (the von Neumann entropy
    of the corresponding diagonal density matrix)."""
    return -math.fsum(p * math.log(p) for p in pop.probs)


def is_passive(state: DiagonalState) -> bool:
    """True iff populations are non-increasing against the (increasing)
    energy ordering, i.e. no work is extractable by any cyclic unitary."""
    p = state.population.probs
    return all(p[k] >= p[k + 1] for k in range(len(p) - 1))


def uniform_mean_energy(spectrum: EnergySpectrum) -> float:
    """Mean energy of the maximally mixed state (the infinite-temperature
    limit of the thermal mean energy)."""
    return math.fsum(spectrum.levels) / spectrum.n


def thermal_mean_energy(spectrum: EnergySpectrum, t: float) -> float:
    """Mean energy of the thermal state at temperature ``t``.

    Evaluated directly from shifted Boltzmann weights, so it stays well
    defined even at temperatures cold enough that excited-level weights
    underflow (where it correctly returns the ground energy).
    """
    if not t > 0.0:
        raise NonPositiveTemperature(f"temperature must be > 0, got {t}")
    levels = spectrum.levels
    e0 = levels[0]
    weights = [math.exp(-(e - e0) / t) for e in levels]
    z = math.fsum(weights)
    return math.fsum(w * e for w, e in zip(weights, levels)) / z


# Bisection bracket for effective_temperature, in units of the spectrum span.
_BRACKET_LO = 1e-6
_BRACKET_HI = 1e9
_MAX_BISECTIONS = 200


def effective_temperature(state: DiagonalState) -> float:
    """Temperature of the thermal state with the same mean energy.

    Found by bisection in log-temperature; the thermal mean energy is
    strictly increasing in temperature, so the bracketed search converges
    unconditionally. The result satisfies
    ``|thermal_mean_energy(spectrum, t) - mean_energy(state)| <= 1e-10 * span``.

    Raises EnergyOutOfRange when the state's mean energy is at or below the
    ground level or at or above the uniform-mixture mean, where no finite
    positive temperature matches.
    """
    spectrum = state.spectrum
    u = mean_energy(state)
    u_inf = uniform_mean_energy(spectrum)
    if u <= spectrum.levels[0] or u >= u_inf:
        raise EnergyOutOfRange(
            f"mean energy {u} is outside ({spectrum.levels[0]}, {u_inf}); "
            "no finite positive temperature matches it"
        )
    span = spectrum.span
    lo = _BRACKET_LO * span
    hi = _BRACKET_HI * span
    # The default bracket covers any realistic state; expand it in the rare
    # case the matching temperature lies beyond the hot end.
    while thermal_mean_energy(spectrum, hi) < u:
        hi *= 10.0
        if hi > 1e300:
            raise EnergyOutOfRange(
                f"mean energy {u} is too close to the uniform mean {u_inf} "
                "to resolve a finite matching temperature"
            )
    for _ in range(_MAX_BISECTIONS):
        mid = math.sqrt(lo * hi)
        if thermal_mean_energy(spectrum, mid) < u:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-15 * lo:
            break
    return 0.5 * (lo + hi)


# --- state file I/O ---------------------------------------------------------
#
# State files are JSON objects {"levels": [...], "probs": [...]}. Parsing
# validates every invariant and reports the first violated one by name (via
# the typed exceptions above).


def state_from_dict(obj: object) -> DiagonalState:
    """Build a validated DiagonalState from a decoded JSON object."""
    if not isinstance(obj, dict):
        raise StateFileError(f"expected a JSON object, got {type(obj).__name__}")
    for key in ("levels", "probs"):
        if key not in obj:
            raise StateFileError(f"missing required key {key!r}")
        if not isinstance(obj[key], list):
            raise StateFileError(f"key {key!r} must be a JSON array")
        for k, x in enumerate(obj[key]):
            if isinstance(x, bool) or not isinstance(x, (int, float)):
                raise StateFileError(f"{key}[{k}] is not a number: {x!r}")
    return make_state(obj["levels"], obj["probs"])


def state_to_dict(state: DiagonalState) -> dict:
    """Inverse of :func:`state_from_dict` (floats round-trip exactly)."""
    return {"levels": list(state.spectrum.levels), "probs": list(state.population.probs)}


def load_state_file(path: str | Path) -> DiagonalState:
    """Read and validate a JSON state file."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFileError(f"{path}: not valid JSON ({exc})") from exc
    return state_from_dict(obj)


def save_state_file(state: DiagonalState, path: str | Path) -> None:
    Path(path).write_text(json.dumps(state_to_dict(state)) + "\n", encoding="utf-8")


__all__ = [
    "NORMALIZATION_TOL",
    "EnergySpectrum",
    "Population",
    "DiagonalState",
    "make_spectrum",
    "make_state",
    "gibbs",
    "mean_energy",
    "entropy",
    "is_passive",
    "uniform_mean_energy",
    "thermal_mean_energy",
    "effective_temperature",
    "state_from_dict",
    "state_to_dict",
    "load_state_file",
    "save_state_file",
]
