"""The two passification routes for an active diagonal state.

The entropy-conserving route rearranges occupations non-increasingly
(a cyclic unitary on diagonal states) and extracts the released energy as
work. The energy-conserving route mixes the rearranged occupations toward
uniform until the original mean energy is restored; the mix is doubly
stochastic, so its output is majorized by the input and never gains purity.
The energy-conserving end state always looks hotter on the mean virtual
temperature scale than the entropy-conserving one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DiagonalState, Population, is_passive, mean_energy, uniform_mean_energy
from .errors import AlreadyPassive, EnergyAboveUniformMean
from .majorization import sort_nonincreasing
from .virtual_temp import mean_virtual_temperature


@dataclass(frozen=True)
class PassificationResult:
    """Outcome of a passification: the passive state, the work extracted
    (zero for the energy-conserving route), and the uniform-mixing weight
    (None for the entropy-conserving route)."""

    passive_state: DiagonalState
    extracted_work: float
    mixing_parameter: float | None = None


def passify_isoentropic(state: DiagonalState) -> PassificationResult:
    """Sort occupations non-increasingly against the fixed spectrum.

    Entropy is conserved (the occupation multiset is unchanged) and the
    energy drop is the maximum cyclically-extractable work; it is zero iff
    the input is already passive. Idempotent.
    """
    sorted_pop, _ = sort_nonincreasing(state.population)
    passive = DiagonalState(state.spectrum, sorted_pop)
    work = mean_energy(state) - mean_energy(passive)
    return PassificationResult(passive, extracted_work=work)


def passify_isoenergetic(state: DiagonalState) -> PassificationResult:
    """Passify at constant mean energy by mixing toward uniform.

    The output population is (1 - w) * sorted(p) + w * uniform with the
    weight w chosen so the mean energy matches the input's. The mean energy
    of the mix is exactly linear in w, so w has a closed form. The
    construction only works below the uniform-mixture mean energy; above it
    no amount of mixing can push the energy back up, and we refuse.
    """
    u = mean_energy(state)
    u_inf = uniform_mean_energy(state.spectrum)
    if u >= u_inf:
        raise EnergyAboveUniformMean(
            f"mean energy {u} is at or above the uniform-mixture mean {u_inf}"
        )
    sorted_pop, _ = sort_nonincreasing(state.population)
    u_sorted = mean_energy(DiagonalState(state.spectrum, sorted_pop))
    w = (u - u_sorted) / (u_inf - u_sorted)
    w = min(max(w, 0.0), 1.0)
    n = state.n
    mixed = Population(tuple((1.0 - w) * p + w / n for p in sorted_pop.probs))
    passive = DiagonalState(state.spectrum, mixed)
    return PassificationResult(passive, extracted_work=0.0, mixing_parameter=w)


@dataclass(frozen=True)
class MeanVtComparison:
    """Mean virtual temperatures of the two passified end states, plus the
    full passification results they came from."""

    t_isoentropic: float
    t_isoenergetic: float
    isoentropic: PassificationResult
    isoenergetic: PassificationResult


def compare_mean_vt(state: DiagonalState) -> MeanVtComparison:
    """Passify along both routes and compare mean virtual temperatures.

    Requires a strictly active input (for a passive one both routes are the
    identity and the comparison is trivial). For valid inputs the
    energy-conserving route is guaranteed strictly hotter:
    ``t_isoenergetic > t_isoentropic``.
    """
    if is_passive(state):
        raise AlreadyPassive("input is already passive; both routes coincide")
    isoentropic = passify_isoentropic(state)
    isoenergetic = passify_isoenergetic(state)
    return MeanVtComparison(
        t_isoentropic=mean_virtual_temperature(isoentropic.passive_state),
        t_isoenergetic=mean_virtual_temperature(isoenergetic.passive_state),
        isoentropic=isoentropic,
        isoenergetic=isoenergetic,
    )


__all__ = [
    "PassificationResult",
    "MeanVtComparison",
    "passify_isoentropic",
    "passify_isoenergetic",
    "compare_mean_vt",
]
