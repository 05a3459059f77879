"""Laser pulse model: plane-wave phase, vector potential, electric field.

Everything is in Hartree atomic units (e = m_e = hbar = 1, c ~ 137.036).
The field is a linearly polarized plane wave whose vector potential
carries a sine-squared envelope,

    A(eta) = (E0 / omega) * sin^2(eta / (2 N)) * sin(eta + cep),

supported on the phase interval eta in [0, 2 pi N] and identically zero
outside.  The phase variable is eta = omega * t - (omega / c) k . r, so
the envelope spans exactly N carrier cycles.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

SPEED_OF_LIGHT_AU = 137.035999084


@dataclass(frozen=True)
class PhysicalConstants:
    """Unit-system constants.  Defaults are Hartree atomic units."""

    c: float = SPEED_OF_LIGHT_AU
    e: float = 1.0
    m: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("c", "e", "m", "hbar"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"PhysicalConstants.{name} must be strictly positive")


#: Shared default constants (atomic units).
ATOMIC_UNITS = PhysicalConstants()

_UNIT_TOL = 1e-12


def _as_unit_vector(v, name: str) -> np.ndarray:
    arr = np.asarray(v, dtype=float)
    if arr.shape != (3,):
        raise ValueError(f"{name} must be a 3-vector, got shape {arr.shape}")
    if abs(np.linalg.norm(arr) - 1.0) > _UNIT_TOL:
        raise ValueError(f"{name} must be a unit vector (|{name}| = 1 within {_UNIT_TOL})")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class PulseParams:
    """Pulse definition: peak field E0, carrier omega, N cycles, CEP, geometry.

    ``pol`` is the polarization unit vector and ``prop`` the propagation
    unit vector; they must be orthogonal.  The default geometry
    propagates along x and polarizes along z.
    """

    E0: float
    omega: float
    n_cycles: int
    cep: float = 0.0
    pol: np.ndarray = field(default=(0.0, 0.0, 1.0))
    prop: np.ndarray = field(default=(1.0, 0.0, 0.0))

    def __post_init__(self):
        if not self.omega > 0.0:
            raise ValueError("pulse omega must be > 0")
        if self.E0 < 0.0:
            raise ValueError("pulse E0 must be >= 0")
        if int(self.n_cycles) != self.n_cycles or self.n_cycles < 1:
            raise ValueError("pulse n_cycles must be an integer >= 1")
        object.__setattr__(self, "n_cycles", int(self.n_cycles))
        object.__setattr__(self, "pol", _as_unit_vector(self.pol, "pol"))
        object.__setattr__(self, "prop", _as_unit_vector(self.prop, "prop"))
        if abs(float(self.pol @ self.prop)) > _UNIT_TOL:
            raise ValueError("pol and prop must be orthogonal")

    @property
    def eta_end(self) -> float:
        """Phase extent of the pulse support, 2 pi N."""
        return 2.0 * np.pi * self.n_cycles

    @property
    def duration(self) -> float:
        """Pulse duration in time at a fixed point, 2 pi N / omega."""
        return self.eta_end / self.omega

    @property
    def amplitude(self) -> float:
        """Carrier amplitude of the vector potential, E0 / omega."""
        return self.E0 / self.omega


@dataclass(frozen=True)
class FieldSample:
    """Field at one space-time point: vector potential, electric field, phase."""

    A: np.ndarray
    E: np.ndarray
    eta: float


def phase(t, r, pulse: PulseParams, consts: PhysicalConstants = ATOMIC_UNITS):
    """Plane-wave phase eta = omega t - (omega / c) k . r.

    ``t`` may be a scalar or an array; ``r`` a 3-vector or an (n, 3) array.
    """
    t = np.asarray(t, dtype=float)
    r = np.asarray(r, dtype=float)
    return pulse.omega * (t - (r @ pulse.prop) / consts.c)


def envelope(eta, pulse: PulseParams):
    """sin^2 envelope on [0, 2 pi N], zero outside."""
    eta = np.asarray(eta, dtype=float)
    inside = (eta >= 0.0) & (eta <= pulse.eta_end)
    return np.where(inside, np.sin(eta / (2.0 * pulse.n_cycles)) ** 2, 0.0)


def vector_potential(eta, pulse: PulseParams):
    """Scalar vector-potential amplitude A(eta) along the polarization axis."""
    eta = np.asarray(eta, dtype=float)
    return pulse.amplitude * envelope(eta, pulse) * np.sin(eta + pulse.cep)


def vector_potential_derivative(eta, pulse: PulseParams):
    """Analytic dA/deta."""
    eta = np.asarray(eta, dtype=float)
    inside = (eta >= 0.0) & (eta <= pulse.eta_end)
    n = pulse.n_cycles
    denv = np.sin(eta / n) / (2.0 * n)  # d/deta sin^2(eta/2N)
    env = np.sin(eta / (2.0 * n)) ** 2
    d = pulse.amplitude * (denv * np.sin(eta + pulse.cep) + env * np.cos(eta + pulse.cep))
    return np.where(inside, d, 0.0)


def electric_field(eta, pulse: PulseParams):
    """Scalar electric-field amplitude E(eta) = -omega dA/deta along pol."""
    return -pulse.omega * vector_potential_derivative(eta, pulse)


def sample_field(t: float, r, pulse: PulseParams,
                 consts: PhysicalConstants = ATOMIC_UNITS) -> FieldSample:
    """Evaluate the full vector field at one space-time point."""
    eta = float(phase(t, r, pulse, consts))
    return FieldSample(
        A=vector_potential(eta, pulse) * pulse.pol,
        E=electric_field(eta, pulse) * pulse.pol,
        eta=eta,
    )


def _refined_peak(fun, pulse: PulseParams, samples_per_cycle: int = 257) -> float:
    """Max of |fun(eta)| over the support: dense scan plus golden refinement."""
    from scipy.optimize import minimize_scalar

    grid = np.linspace(0.0, pulse.eta_end, samples_per_cycle * pulse.n_cycles)
    vals = np.abs(fun(grid, pulse))
    k = int(np.argmax(vals))
    lo = grid[max(k - 1, 0)]
    hi = grid[min(k + 1, grid.size - 1)]
    res = minimize_scalar(lambda x: -abs(float(fun(x, pulse))),
                          bounds=(lo, hi), method="bounded",
                          options={"xatol": 1e-12})
    return max(float(vals[k]), -float(res.fun))


def peak_vector_potential(pulse: PulseParams) -> float:
    """Maximum of |A(eta)| over the pulse (at most E0/omega)."""
    return _refined_peak(vector_potential, pulse)


def peak_electric_field(pulse: PulseParams) -> float:
    """Maximum of |E(eta)| over the pulse (at most E0 (1 + 1/(2N)))."""
    return _refined_peak(electric_field, pulse)
