"""Virtual temperatures of level pairs in passive states.

Each pair of levels (i, j) with p_i > p_j looks thermal at the temperature
(E_j - E_i) / ln(p_i / p_j). A tied pair (p_i = p_j) is assigned the
limiting value ``math.inf`` rather than treated as an error: ties are legal
for passivity and the infinite sentinel keeps min/max/mean well defined as
long as at least one pair is untied.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import DiagonalState, is_passive
from .errors import AllDegenerate, IndexOutOfRange, NotPassive

_REL_SLACK = 1e-12


def _close(a: float, b: float) -> bool:
    if math.isinf(a) or math.isinf(b):
        return a == b
    return math.isclose(a, b, rel_tol=_REL_SLACK, abs_tol=0.0)


@dataclass(frozen=True)
class VtProfile:
    """Adjacent-pair virtual temperatures of a passive state.

    ``adjacent`` holds one temperature per adjacent level pair (``math.inf``
    for tied pairs). ``t_min`` is the minimum over the finite entries,
    ``t_max`` the maximum over all entries (infinite when any pair is tied),
    and ``mean`` the gap-weighted harmonic mean, which always equals the
    ground-to-top pair temperature. ``weights`` are the normalized gap
    fractions used in the mean.
    """

    adjacent: tuple[float, ...]
    t_min: float
    t_max: float
    mean: float
    weights: tuple[float, ...]

    def __post_init__(self):
        for k, t in enumerate(self.adjacent):
            if not t > 0.0:
                raise ValueError(f"adjacent temperature [{k}]={t} must be > 0")
        if abs(math.fsum(self.weights) - 1.0) > 1e-12:
            raise ValueError("gap weights must sum to 1")
        if not (self.t_min <= self.mean * (1.0 + _REL_SLACK)):
            raise ValueError(f"mean {self.mean} below t_min {self.t_min}")
        if not (math.isinf(self.t_max) or self.mean <= self.t_max * (1.0 + _REL_SLACK)):
            raise ValueError(f"mean {self.mean} above t_max {self.t_max}")


def _require_passive(state: DiagonalState) -> None:
    if not is_passive(state):
        raise NotPassive("populations are not non-increasing with energy")


def _log_ratio(p_hi: float, p_lo: float) -> float:
    """ln(p_hi / p_lo) for p_hi >= p_lo, as a difference of logs."""
    return math.log(p_hi) - math.log(p_lo)


def pair_virtual_temperature(state: DiagonalState, i: int, j: int) -> float:
    """Virtual temperature of the level pair (i, j), zero-based, i < j.

    Returns ``math.inf`` when the two occupations are tied.
    """
    _require_passive(state)
    n = state.n
    if not (0 <= i < j < n):
        raise IndexOutOfRange(f"need 0 <= i < j < {n}, got i={i}, j={j}")
    p = state.population.probs
    d = _log_ratio(p[i], p[j])
    if d <= 0.0:
        return math.inf
    return (state.spectrum.levels[j] - state.spectrum.levels[i]) / d


def adjacent_temperatures(state: DiagonalState) -> tuple[float, ...]:
    """Virtual temperatures of all adjacent pairs (``math.inf`` for ties)."""
    _require_passive(state)
    p = state.population.probs
    gaps = state.spectrum.gaps
    temps = []
    for k in range(state.n - 1):
        d = _log_ratio(p[k], p[k + 1])
        temps.append(gaps[k] / d if d > 0.0 else math.inf)
    return tuple(temps)


def adjacent_profile(state: DiagonalState) -> VtProfile:
    """Full adjacent-pair profile: temperatures, min, max, weighted mean.

    Raises AllDegenerate for a uniform population, where every pair is tied
    and the mean is undefined.
    """
    temps = adjacent_temperatures(state)
    finite = [t for t in temps if not math.isinf(t)]
    if not finite:
        raise AllDegenerate("uniform population: every adjacent pair is tied")
    gaps = state.spectrum.gaps
    total = math.fsum(gaps)
    weights = tuple(g / total for g in gaps)
    # w / inf == 0.0, so tied pairs drop out of the harmonic sum, which is
    # exactly their analytic limit.
    inv_mean = math.fsum(w / t for w, t in zip(weights, temps))
    return VtProfile(
        adjacent=temps,
        t_min=min(finite),
        t_max=max(temps),
        mean=1.0 / inv_mean,
        weights=weights,
    )


def mean_virtual_temperature(state: DiagonalState) -> float:
    """Gap-weighted harmonic mean of the adjacent virtual temperatures.

    Identically equal to the ground-to-top pair temperature
    ``pair_virtual_temperature(state, 0, n - 1)``.
    """
    return adjacent_profile(state).mean


def verify_minmax_lemma(state: DiagonalState) -> bool:
    """Check that the extremal virtual temperatures sit on adjacent pairs.

    Exhaustively enumerates every pair (i, j), i < j, and confirms that the
    minimum and maximum over all pairs coincide with the profile's t_min and
    t_max. Any non-adjacent pair temperature is a weighted harmonic mean of
    the adjacent ones inside its gap window, so it can never be extremal.
    """
    profile = adjacent_profile(state)
    n = state.n
    pair_temps = [
        pair_virtual_temperature(state, i, j) for i in range(n - 1) for j in range(i + 1, n)
    ]
    finite = [t for t in pair_temps if not math.isinf(t)]
    min_all = min(finite) if finite else math.inf
    max_all = max(pair_temps)
    return _close(min_all, profile.t_min) and _close(max_all, profile.t_max)


__all__ = [
    "VtProfile",
    "pair_virtual_temperature",
    "adjacent_temperatures",
    "adjacent_profile",
    "mean_virtual_temperature",
    "verify_minmax_lemma",
]
