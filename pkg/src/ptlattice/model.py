"""Open one-dimensional bosonic chain in the discrete mean-field description.

The chain obeys (units hbar = m = 1)

    i dpsi_k/dt = -J psi_{k-1} - J psi_{k+1} + g |psi_k|^2 psi_k
                  + mu_k psi_k - i (gamma_k / 2) psi_k ,

with hard-wall ends: a missing neighbour amplitude is zero.  Local rates
follow the loss-positive convention, gamma_k > 0 drains site k and
gamma_k < 0 feeds it.  Site indices in the public API are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "LatticeParams",
    "LatticeState",
    "rhs",
    "tms_as_lattice",
    "site_occupation",
    "total_norm",
    "from_polar",
]


def _frozen_float_array(values, length: int, name: str) -> np.ndarray:
    arr = (
        np.zeros(length, dtype=float)
        if values is None
        else np.array(values, dtype=float, copy=True)
    )
    if arr.shape != (length,):
        raise ValueError(f"{name} must have length {length}, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class LatticeParams:
    """Static chain parameters: size, hopping, nonlinearity, onsite terms.

    ``mu_onsite`` and ``gamma_site`` default to all zeros.  Instances are
    immutable (arrays are read-only) and safe to share between threads.
    """

    M: int
    J: float
    g: float = 0.0
    mu_onsite: np.ndarray | None = field(default=None)
    gamma_site: np.ndarray | None = field(default=None)

    def __post_init__(self):
        M = int(self.M)
        if M < 1:
            raise ValueError(f"site count M must be >= 1, got {M}")
        J = float(self.J)
        if not np.isfinite(J) or J < 0:
            raise ValueError(f"hopping J must be finite and >= 0, got {J}")
        g = float(self.g)
        if not np.isfinite(g):
            raise ValueError("nonlinearity g must be finite")
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "J", J)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "mu_onsite", _frozen_float_array(self.mu_onsite, M, "mu_onsite"))
        object.__setattr__(
            self, "gamma_site", _frozen_float_array(self.gamma_site, M, "gamma_site")
        )


@dataclass(frozen=True, eq=False)
class LatticeState:
    """Complex amplitude per site plus the simulation clock."""

    amplitudes: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex, copy=True)
        if amps.ndim != 1 or amps.size < 1:
            raise ValueError("amplitudes must be a non-empty 1-D array")
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes contain non-finite entries")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "time", float(self.time))

    @property
    def M(self) -> int:
        return self.amplitudes.size

    @property
    def occupations(self) -> np.ndarray:
        """n_k = |psi_k|^2 for every site."""
        return np.abs(self.amplitudes) ** 2

    @property
    def phases(self) -> np.ndarray:
        """Principal-value phases arg(psi_k) in (-pi, pi]."""
        return np.angle(self.amplitudes)


def _check_consistent(state: LatticeState, params: LatticeParams) -> None:
    if state.M != params.M:
        raise ValueError(
            f"state has {state.M} sites but params describe {params.M}"
        )


def _check_site(k: int, M: int) -> None:
    if not 1 <= k <= M:
        raise IndexError(f"site index {k} outside 1..{M}")


def _rhs(psi: np.ndarray, params: LatticeParams) -> np.ndarray:
    # hard wall: neighbours beyond the ends contribute zero
    neigh = np.zeros_like(psi)
    neigh[1:] += psi[:-1]
    neigh[:-1] += psi[1:]
    h = -params.J * neigh + (params.g * np.abs(psi) ** 2 + params.mu_onsite) * psi
    return -1j * h - 0.5 * params.gamma_site * psi


def rhs(state: LatticeState, params: LatticeParams) -> np.ndarray:
    """Time derivative dpsi_k/dt of every amplitude under the chain equation."""
    _check_consistent(state, params)
    return _rhs(state.amplitudes, params)


def tms_as_lattice(gamma: float, g: float, J: float) -> LatticeParams:
    """Two-site chain equivalent to the gain--loss dimer.

    Site 1 gains at rate gamma, site 2 loses at the same rate, so
    ``gamma_site = (-2*gamma, +2*gamma)`` under the loss-positive convention
    (the equation of motion carries gamma_site/2).
    """
    if not J > 0:
        raise ValueError(f"J must be > 0, got {J}")
    return LatticeParams(M=2, J=J, g=g, gamma_site=(-2.0 * gamma, 2.0 * gamma))


def site_occupation(state: LatticeState, k: int) -> float:
    """Occupation n_k = |psi_k|^2 at 1-based site k."""
    _check_site(k, state.M)
    return float(abs(state.amplitudes[k - 1]) ** 2)


def total_norm(state: LatticeState) -> float:
    """Total particle number sum_k |psi_k|^2."""
    return float(np.sum(np.abs(state.amplitudes) ** 2))


def from_polar(occupations, phases, time: float = 0.0) -> LatticeState:
    """Build a state from occupations n_k >= 0 and phases, psi_k = sqrt(n_k) e^{i phi_k}."""
    n = np.asarray(occupations, dtype=float)
    phi = np.asarray(phases, dtype=float)
    if n.shape != phi.shape or n.ndim != 1:
        raise ValueError("occupations and phases must be 1-D arrays of equal length")
    if np.any(n < 0):
        raise ValueError("occupations must be non-negative")
    return LatticeState(np.sqrt(n) * np.exp(1j * phi), time=time)
