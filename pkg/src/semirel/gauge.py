"""Propagation-gauge quantities, evaluated with commuting (classical) variables.

The gauge shifts the canonical momentum so that a free classical electron
starting at rest keeps zero canonical momentum throughout the pulse.  The
central objects are

    kinetic momentum   d  = p + e A pol + (e^2 A^2 / 2 m c) prop
    effective mass     mu = m (1 + e^2 A^2 / (2 m^2 c^2))
    scalar             q^2 = p^2 + 2 e A (pol.p) + (e^2 A^2 / m c) (prop.p)
    gauge function     xi(eta) = -(e / 2 m omega) * integral of A^2 up to eta

which satisfy the exact identity m^2 c^4 + d^2 c^2 = mu^2 c^4 + q^2 c^2.
Operator-ordered versions (anti-commutators with spatially dependent mu)
matter only for a quantum treatment beyond the long-wavelength limit and
are deliberately not implemented here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .pulse import ATOMIC_UNITS, PhysicalConstants, PulseParams, vector_potential


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to reach the requested tolerance."""


def effective_mass(A, consts: PhysicalConstants = ATOMIC_UNITS):
    """Field-dressed mass mu = m (1 + e^2 A^2 / (2 m^2 c^2)).

    Equals the time-dependent relativistic mass of a free classical
    electron that started at rest; mu >= m with equality iff A = 0.
    """
    A = np.asarray(A, dtype=float)
    m, e, c = consts.m, consts.e, consts.c
    return m * (1.0 + (e * A) ** 2 / (2.0 * (m * c) ** 2))


def kinetic_momentum(p, A, pulse: PulseParams,
                     consts: PhysicalConstants = ATOMIC_UNITS) -> np.ndarray:
    """Kinetic momentum d = p + e A pol + (e^2 A^2 / 2 m c) prop.

    ``p`` may be a 3-vector or an (..., 3) array; ``A`` a matching scalar
    or array of scalar vector-potential amplitudes.
    """
    p = np.asarray(p, dtype=float)
    A = np.asarray(A, dtype=float)
    e, m, c = consts.e, consts.m, consts.c
    return (p + (e * A)[..., None] * pulse.pol
            + (e ** 2 * A ** 2 / (2.0 * m * c))[..., None] * pulse.prop)


def q_squared_classical(p, A, pulse: PulseParams,
                        consts: PhysicalConstants = ATOMIC_UNITS):
    """Classical q^2 = p^2 + 2 e A (pol.p) + (e^2 A^2 / m c) (prop.p).

    The anti-commutator of the operator form collapses to twice the
    product for commuting variables.
    """
    p = np.asarray(p, dtype=float)
    A = np.asarray(A, dtype=float)
    e, m, c = consts.e, consts.m, consts.c
    return (np.sum(p * p, axis=-1) + 2.0 * e * A * (p @ pulse.pol)
            + (e ** 2 * A ** 2 / (m * c)) * (p @ pulse.prop))


def integral_a_squared(eta_lo: float, eta_hi: float, pulse: PulseParams,
                       tol: float = 1e-12) -> float:
    """Integral of A(eta)^2 over [eta_lo, eta_hi] by adaptive quadrature.

    The range is clipped to the pulse support and split at carrier-cycle
    boundaries so each panel is mildly oscillatory.  Raises
    QuadratureError if the accumulated error estimate exceeds
    max(tol, tol * |integral|).
    """
    lo = max(float(eta_lo), 0.0)
    hi = min(float(eta_hi), pulse.eta_end)
    if hi <= lo or pulse.E0 == 0.0:
        return 0.0

    def a2(x):
        return float(vector_potential(x, pulse)) ** 2

    edges = 2.0 * np.pi * np.arange(0, pulse.n_cycles + 1)
    cuts = np.concatenate(([lo], edges[(edges > lo) & (edges < hi)], [hi]))
    total = 0.0
    err = 0.0
    for a, b in zip(cuts[:-1], cuts[1:]):
        val, abserr = quad(a2, a, b, epsabs=tol, epsrel=tol, limit=200)
        total += val
        err += abserr
    if err > max(tol, tol * abs(total)) * 10.0:
        raise QuadratureError(
            f"A^2 quadrature error {err:.3e} exceeds tolerance on [{lo}, {hi}]")
    return total


def gauge_function(eta: float, pulse: PulseParams,
                   consts: PhysicalConstants = ATOMIC_UNITS,
                   tol: float = 1e-12) -> float:
    """Gauge function xi(eta) = -(e / 2 m omega) * integral_-inf^eta A^2.

    Monotonically non-increasing in eta; zero before the pulse starts.
    Used for diagnostics and gauge-equivalence tests only, the dynamics
    never needs it explicitly.
    """
    e, m = consts.e, consts.m
    return -e / (2.0 * m * pulse.omega) * integral_a_squared(-np.inf, eta, pulse, tol)


@dataclass(frozen=True)
class GaugeEval:
    """Bundle of the gauge quantities at one (p, eta) point."""

    mu: float
    d: np.ndarray
    xi: float
    q2: float


def evaluate_gauge(p, eta: float, pulse: PulseParams,
                   consts: PhysicalConstants = ATOMIC_UNITS) -> GaugeEval:
    """Evaluate mu, d, xi and q^2 at canonical momentum ``p`` and phase ``eta``."""
    A = float(vector_potential(eta, pulse))
    return GaugeEval(
        mu=float(effective_mass(A, consts)),
        d=kinetic_momentum(np.asarray(p, dtype=float), A, pulse, consts),
        xi=gauge_function(eta, pulse, consts),
        q2=float(q_squared_classical(np.asarray(p, dtype=float), A, pulse, consts)),
    )
