"""Typed errors raised by virtemp.

Every violated invariant gets its own exception class so callers (and the
CLI) can report the failing condition by name instead of parsing messages.
All of them derive from :class:`VirtempError`.
"""


class VirtempError(Exception):
    """Base class for all virtemp validation and domain errors."""


# --- spectrum / population construction -----------------------------------

class TooFewLevels(VirtempError):
    """Spectrum has fewer than two energy levels."""


class NonIncreasingLevels(VirtempError):
    """Energy levels are not strictly increasing."""


class NonPositiveProbability(VirtempError):
    """A population entry is zero or negative."""


class NotNormalized(VirtempError):
    """Population entries do not sum to one within tolerance."""


class LengthMismatch(VirtempError):
    """Spectrum and population (or two populations) differ in length."""


class StateFileError(VirtempError):
    """State file is structurally malformed (missing keys, wrong types)."""


# --- thermodynamic operations ----------------------------------------------

class NonPositiveTemperature(VirtempError):
    """Temperature argument must be strictly positive."""


class EnergyOutOfRange(VirtempError):
    """No finite positive temperature reproduces the requested mean energy."""


class NotPassive(VirtempError):
    """Operation requires a passive state (non-increasing populations)."""


class AllDegenerate(VirtempError):
    """Every adjacent population pair is tied; the population is uniform and
    the mean virtual temperature is undefined."""


class IndexOutOfRange(VirtempError):
    """Level index outside the spectrum, or pair indices not ordered i < j."""


class NotSorted(VirtempError):
    """Majorization input is not sorted non-increasingly."""


class EnergyAboveUniformMean(VirtempError):
    """Energy-conserving passification is impossible: the state's mean energy
    is at or above the uniform-mixture mean."""


class AlreadyPassive(VirtempError):
    """Comparison requires a strictly active input state."""


class EquilibriumNoFlow(VirtempError):
    """Environment temperature matches the state's effective temperature;
    no heat-flow direction exists."""


class InvalidParams(VirtempError):
    """Model or cycle parameters violate a validity constraint."""


class NotHermitian(InvalidParams):
    """Input matrix to the eigensolver is not Hermitian within tolerance."""
