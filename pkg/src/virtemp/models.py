"""Two-qubit spin working media with closed-form spectra.

Both media are a pair of spin-1/2 particles in a transverse field ``b``:
the anisotropic XY coupling (anisotropy ``gamma``) and the isotropic
exchange coupling. Each comes with a closed-form spectrum, the matching
dense Hamiltonian for cross-validation, and the closed-form Otto efficiency
ceiling for a field sweep b1 -> b2 at fixed coupling. A small cyclic-Jacobi
eigensolver is included so the closed forms can be checked against plain
numerics without any external solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import EnergySpectrum, make_spectrum
from .errors import InvalidParams, NotHermitian
from .otto import OttoSpec

_SX = np.array([[0.0, 1.0], [1.0, 0.0]])
_SY = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_SZ = np.array([[1.0, 0.0], [0.0, -1.0]])
_I2 = np.eye(2)


def dressed_field(b: float, j: float, gamma: float) -> float:
    """Field scale dressed by the anisotropic coupling: sqrt(b^2 + (gamma*j)^2)."""
    return math.hypot(b, gamma * j)


@dataclass(frozen=True)
class XyParams:
    """Anisotropic XY medium: field b, coupling j, anisotropy gamma in [0, 1].

    Valid parameters need j > 0 (otherwise the two middle levels are
    degenerate) and the dressed field above j (otherwise the outer gaps
    close), which keeps the four levels strictly ordered.
    """

    b: float
    j: float
    gamma: float

    def __post_init__(self):
        if not 0.0 <= self.gamma <= 1.0:
            raise InvalidParams(f"anisotropy gamma={self.gamma} must be in [0, 1]")
        if self.b < 0.0:
            raise InvalidParams(f"field b={self.b} must be >= 0")
        if not self.j > 0.0:
            raise InvalidParams(
                f"coupling j={self.j} must be > 0 (j = 0 degenerates the middle levels)"
            )
        if not dressed_field(self.b, self.j, self.gamma) > self.j:
            raise InvalidParams(
                f"need sqrt(b^2 + (gamma*j)^2) > j for an ordered spectrum, "
                f"got b={self.b}, j={self.j}, gamma={self.gamma}"
            )


@dataclass(frozen=True)
class XxxParams:
    """Isotropic exchange medium: field b > 0, coupling 0 < j < b/4.

    The coupling window is exactly what keeps the singlet level strictly
    between the field-split triplet levels.
    """

    b: float
    j: float

    def __post_init__(self):
        if not self.b > 0.0:
            raise InvalidParams(f"field b={self.b} must be > 0")
        if not 0.0 < self.j < self.b / 4.0:
            raise InvalidParams(
                f"coupling j={self.j} must satisfy 0 < j < b/4 = {self.b / 4.0}"
            )


def xy_spectrum(p: XyParams) -> EnergySpectrum:
    """Exact XY levels (-2K, -2j, 2j, 2K) with K the dressed field."""
    k = dressed_field(p.b, p.j, p.gamma)
    return make_spectrum((-2.0 * k, -2.0 * p.j, 2.0 * p.j, 2.0 * k))


def xy_hamiltonian_matrix(p: XyParams) -> np.ndarray:
    """Dense 4x4 XY Hamiltonian in the computational basis (real symmetric)."""
    field = p.b * (np.kron(_SZ, _I2) + np.kron(_I2, _SZ))
    coupling = p.j * (
        (1.0 + p.gamma) * np.kron(_SX, _SX) + (1.0 - p.gamma) * np.kron(_SY, _SY).real
    )
    return field + coupling


def xxx_spectrum(p: XxxParams) -> EnergySpectrum:
    """Exact isotropic-exchange levels (2j-2b, -6j, 2j, 2j+2b)."""
    return make_spectrum(
        (2.0 * p.j - 2.0 * p.b, -6.0 * p.j, 2.0 * p.j, 2.0 * p.j + 2.0 * p.b)
    )


def xxx_hamiltonian_matrix(p: XxxParams) -> np.ndarray:
    """Dense 4x4 isotropic-exchange Hamiltonian (real symmetric)."""
    field = p.b * (np.kron(_SZ, _I2) + np.kron(_I2, _SZ))
    exchange = 2.0 * p.j * (
        np.kron(_SX, _SX) + np.kron(_SY, _SY).real + np.kron(_SZ, _SZ)
    )
    return field + exchange


def xy_eta_ub(b1: float, b2: float, j: float, gamma: float) -> float:
    """Closed-form Otto efficiency ceiling for an XY field sweep b1 -> b2.

    Equals (K1 - K2) / (K1 - j) with K_i the dressed fields; the smallest
    gap-compression ratio sits on the outer gaps, so this matches the
    generic one-minus-min-ratio ceiling exactly.
    """
    XyParams(b1, j, gamma)
    XyParams(b2, j, gamma)
    if not b1 > b2:
        raise InvalidParams(f"field must decrease: b1={b1} <= b2={b2}")
    k1 = dressed_field(b1, j, gamma)
    k2 = dressed_field(b2, j, gamma)
    return (k1 - k2) / (k1 - j)


def xxx_eta_ub(b1: float, b2: float, j: float) -> float:
    """Closed-form ceiling for an isotropic-exchange field sweep b1 -> b2:
    (b1 - b2) / (b1 - 4 j)."""
    XxxParams(b1, j)
    XxxParams(b2, j)
    if not b1 > b2:
        raise InvalidParams(f"field must decrease: b1={b1} <= b2={b2}")
    return (b1 - b2) / (b1 - 4.0 * j)


def xy_otto_spec(
    b1: float, b2: float, j: float, gamma: float, t_hot: float, t_cold: float
) -> OttoSpec:
    """Otto cycle over the XY medium: field b1 at the hot end, b2 at the cold."""
    return OttoSpec(
        spectrum_h=xy_spectrum(XyParams(b1, j, gamma)),
        spectrum_c=xy_spectrum(XyParams(b2, j, gamma)),
        t_hot=t_hot,
        t_cold=t_cold,
    )


def xxx_otto_spec(
    b1: float, b2: float, j: float, t_hot: float, t_cold: float
) -> OttoSpec:
    """Otto cycle over the isotropic-exchange medium."""
    return OttoSpec(
        spectrum_h=xxx_spectrum(XxxParams(b1, j)),
        spectrum_c=xxx_spectrum(XxxParams(b2, j)),
        t_hot=t_hot,
        t_cold=t_cold,
    )


# --- small dense Hermitian eigensolver --------------------------------------

_HERMITICITY_TOL = 1e-12
_MAX_DIM = 8
_MAX_SWEEPS = 100
_OFFDIAG_TOL = 1e-14


def diagonalize_hermitian(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a small Hermitian matrix by cyclic Jacobi sweeps.

    Returns (eigenvalues ascending, eigenvectors as columns). Each column is
    phase-fixed so its first non-negligible component is real and positive;
    for a real symmetric input the returned eigenvectors are real. Sweeps
    stop when the off-diagonal Frobenius norm drops below 1e-14 of the
    matrix norm. Intended for cross-validating closed-form spectra, hence
    the dimension cap at 8.
    """
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidParams(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n > _MAX_DIM:
        raise InvalidParams(f"dimension {n} exceeds the supported maximum {_MAX_DIM}")
    if np.max(np.abs(a - a.conj().T)) > _HERMITICITY_TOL:
        raise NotHermitian("matrix is not Hermitian within 1e-12")

    norm = np.linalg.norm(a)
    v = np.eye(n, dtype=complex)
    if norm > 0.0:
        for _ in range(_MAX_SWEEPS):
            off = math.sqrt(max(np.linalg.norm(a) ** 2 - np.linalg.norm(a.diagonal()) ** 2, 0.0))
            if off <= _OFFDIAG_TOL * norm:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    g = a[p, q]
                    mag = abs(g)
                    if mag == 0.0:
                        continue
                    phase = g / mag
                    # Real Givens angle after factoring out the pivot phase;
                    # the combined unitary zeroes a[p, q].
                    theta = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                    c = 1.0 / math.sqrt(t * t + 1.0)
                    s = t * c
                    col_p = a[:, p].copy()
                    col_q = a[:, q].copy()
                    a[:, p] = phase * c * col_p - s * col_q
                    a[:, q] = phase * s * col_p + c * col_q
                    row_p = a[p, :].copy()
                    row_q = a[q, :].copy()
                    a[p, :] = np.conj(phase) * c * row_p - s * row_q
                    a[q, :] = np.conj(phase) * s * row_p + c * row_q
                    vcol_p = v[:, p].copy()
                    vcol_q = v[:, q].copy()
                    v[:, p] = phase * c * vcol_p - s * vcol_q
                    v[:, q] = phase * s * vcol_p + c * vcol_q

    eigenvalues = a.diagonal().real.copy()
    order = np.argsort(eigenvalues, kind="stable")
    eigenvalues = eigenvalues[order]
    v = v[:, order]
    for i in range(n):
        col = v[:, i]
        nonzero = np.flatnonzero(np.abs(col) > 1e-12)
        if nonzero.size:
            lead = col[nonzero[0]]
            col *= np.conj(lead) / abs(lead)
    if np.isrealobj(np.asarray(m)):
        v = v.real
    return eigenvalues, v


class NotHermitian(InvalidParams):
    """Input matrix to the eigensolver is not Hermitian within tolerance."""


__all__ = [
    "XyParams",
    "XxxParams",
    "dressed_field",
    "xy_spectrum",
    "xy_hamiltonian_matrix",
    "xxx_spectrum",
    "xxx_hamiltonian_matrix",
    "xy_eta_ub",
    "xxx_eta_ub",
    "xy_otto_spec",
    "xxx_otto_spec",
    "diagonalize_hermitian",
    "NotHermitian",
]
