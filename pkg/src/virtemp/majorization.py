"""Majorization relations between probability vectors.

``p`` is majorized by ``q`` (p is more spread out) when every tail partial
sum of ``p - q`` is non-negative. All comparisons carry an absolute slack of
1e-12 so pure round-off never flips a verdict. Inputs must already be sorted
non-increasingly; passive-state populations are, and silent re-sorting would
hide caller bugs, so unsorted input is an error. Use
:func:`sort_nonincreasing` when you do need the sorted copy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import DiagonalState, EnergySpectrum, Population, gibbs
from .errors import IndexOutOfRange, LengthMismatch, NotSorted
from .virtual_temp import adjacent_profile

SLACK = 1e-12


@dataclass(frozen=True)
class MajorizationReport:
    """Tail-sum deficits M_1..M_{n-1} and the resulting verdict."""

    deficits: tuple[float, ...]
    holds: bool


def sort_nonincreasing(pop: Population) -> tuple[Population, tuple[int, ...]]:
    """Sorted copy of a population plus the permutation that produced it.

    Ties keep their original order (stable sort), so the result is
    deterministic.
    """
    order = tuple(sorted(range(pop.n), key=lambda k: -pop.probs[k]))
    return Population(tuple(pop.probs[k] for k in order)), order


def _check_same_length(p: Population, q: Population) -> None:
    if p.n != q.n:
        raise LengthMismatch(f"populations have lengths {p.n} and {q.n}")


def _check_sorted(pop: Population, name: str) -> None:
    probs = pop.probs
    for k in range(len(probs) - 1):
        if probs[k] < probs[k + 1]:
            raise NotSorted(
                f"{name} is not sorted non-increasingly at index {k}: "
                f"{probs[k]} < {probs[k + 1]}"
            )


def tail_sum_difference(p: Population, q: Population, m: int) -> float:
    """Sum of p_j - q_j over the tail starting at zero-based index m.

    For normalized inputs the full tail (m = 0) is zero up to round-off;
    the remaining tails are the partial sums that define majorization.
    """
    _check_same_length(p, q)
    if not 0 <= m < p.n:
        raise IndexOutOfRange(f"tail index m={m} outside 0..{p.n - 1}")
    return math.fsum(p.probs[j] - q.probs[j] for j in range(m, p.n))


def partial_sum_deficits(p: Population, q: Population) -> MajorizationReport:
    """Tail-sum deficits of two sorted populations and the p-majorized-by-q
    verdict (all deficits non-negative within slack)."""
    _check_same_length(p, q)
    _check_sorted(p, "first population")
    _check_sorted(q, "second population")
    deficits = tuple(tail_sum_difference(p, q, m) for m in range(1, p.n))
    return MajorizationReport(deficits, all(d >= -SLACK for d in deficits))


def is_majorized_by(p: Population, q: Population) -> bool:
    """True iff p is majorized by q, i.e. p is more spread out than q."""
    return partial_sum_deficits(p, q).holds


def energy_difference_via_gaps(
    spectrum: EnergySpectrum, p: Population, q: Population
) -> float:
    """Mean-energy difference U(p) - U(q) assembled from gap-weighted tails.

    Abel summation turns sum_k E_k (p_k - q_k) into
    sum_m gap_m * tail_m(p - q); both inputs being normalized kills the
    ground-level term. Agrees with the direct level sum to round-off.
    """
    if spectrum.n != p.n or spectrum.n != q.n:
        raise LengthMismatch(
            f"spectrum has {spectrum.n} levels, populations {p.n} and {q.n}"
        )
    return math.fsum(
        spectrum.gaps[m - 1] * tail_sum_difference(p, q, m) for m in range(1, p.n)
    )


def thermal_majorization_bounds(
    state: DiagonalState,
) -> tuple[MajorizationReport, MajorizationReport | None]:
    """Majorization of a passive state against its extremal thermal states.

    First report: the population is majorized by the thermal population at
    the minimum adjacent virtual temperature. Second report: the thermal
    population at the maximum adjacent virtual temperature is majorized by
    the state; skipped (None) when that temperature is infinite, i.e. some
    adjacent pair is tied.
    """
    profile = adjacent_profile(state)
    q_min = gibbs(state.spectrum, profile.t_min)
    colder_bound = partial_sum_deficits(state.population, q_min)
    hotter_bound = None
    if not math.isinf(profile.t_max):
        q_max = gibbs(state.spectrum, profile.t_max)
        hotter_bound = partial_sum_deficits(q_max, state.population)
    return colder_bound, hotter_bound


__all__ = [
    "SLACK",
    "MajorizationReport",
    "sort_nonincreasing",
    "tail_sum_difference",
    "partial_sum_deficits",
    "is_majorized_by",
    "energy_difference_via_gaps",
    "thermal_majorization_bounds",
]
