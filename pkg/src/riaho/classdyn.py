"""Classical orbits of the rotationally invariant anisotropic oscillator.

The canonical Hamiltonian

    H_g = (p1^2 + p2^2)/2m + m w^2 (x1^2 + x2^2)/2 + g w (x1 p2 - x2 p1)

decouples into circular modes rotating at rates w*ell1 and -w*ell2, so the
orbit in the plane z = x1 + i x2 is the two-frequency epicycle

    z(t) = R1 e^{i gamma1} e^{i w ell1 t} + R2 e^{-i gamma2} e^{-i w ell2 t}.

This module gives the closed form, Hamilton's equations with a fixed-step
RK4 cross-check, exact closure periods, the cusp and origin-crossing
predicates that organize the orbit gallery, and evaluation of the catalog
integrals along orbits.  Everything here uses the m = 1 normalization (the
radii are in units of 1/sqrt(m*w) anyway); the flow helpers accept m for
completeness.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .coupling import Coupling
from .phasealg.catalog import GENERATOR_NAMES, generator
from .phasealg.poly import Params

__all__ = [
    "TrajectoryParams", "PhaseState", "position", "velocity",
    "state_from_params", "hamiltonian_flow_rhs", "hamiltonian_value",
    "integrate", "closure_turns", "closure_period", "is_cusped",
    "pass_through_origin", "minkowski_radius_sq", "conserved_values",
    "ORBIT_GALLERY", "CUSP_GALLERY", "gallery_params",
]


@dataclass(frozen=True)
class TrajectoryParams:
    """Two-mode orbit data: radii, phases, frequency, coupling."""

    R1: float
    R2: float
    gamma1: float = 0.0
    gamma2: float = 0.0
    omega: float = 1.0
    coupling: Coupling = Coupling(Fraction(0))

    def __post_init__(self):
        if self.R1 < 0 or self.R2 < 0:
            raise ValueError("radii must be non-negative")
        if self.omega <= 0:
            raise ValueError("omega must be positive")
        object.__setattr__(self, "coupling", Coupling.coerce(self.coupling))


@dataclass
class PhaseState:
    x1: float
    x2: float
    p1: float
    p2: float

    def as_array(self) -> np.ndarray:
        return np.array([self.x1, self.x2, self.p1, self.p2], dtype=float)


def _mode_values(params: TrajectoryParams, t):
    """(b1plus, b2minus) along the orbit; z = b1plus + b2minus."""
    c = params.coupling
    w = params.omega
    l1, l2 = float(c.ell1), float(c.ell2)
    t = np.asarray(t, dtype=float)
    b1p = params.R1 * np.exp(1j * (params.gamma1 + w * l1 * t))
    b2m = params.R2 * np.exp(-1j * (params.gamma2 + w * l2 * t))
    return b1p, b2m


def position(params: TrajectoryParams, t):
    """Closed-form (x1, x2) at time(s) t."""
    b1p, b2m = _mode_values(params, t)
    z = b1p + b2m
    return z.real, z.imag


def velocity(params: TrajectoryParams, t):
    """Closed-form (dx1/dt, dx2/dt)."""
    c = params.coupling
    w = params.omega
    b1p, b2m = _mode_values(params, t)
    zdot = 1j * w * (float(c.ell1) * b1p - float(c.ell2) * b2m)
    return zdot.real, zdot.imag


def state_from_params(params: TrajectoryParams, t: float = 0.0,
                      m: float = 1.0) -> PhaseState:
    """Canonical state on the orbit; momenta include the rotational shift
    p1 = m(dx1/dt + g w x2), p2 = m(dx2/dt - g w x1)."""
    x1, x2 = position(params, t)
    v1, v2 = velocity(params, t)
    gw = params.coupling.as_float() * params.omega
    return PhaseState(float(x1), float(x2),
                      m * (float(v1) + gw * float(x2)),
                      m * (float(v2) - gw * float(x1)))


def hamiltonian_flow_rhs(state, coupling, omega: float, m: float = 1.0):
    """Hamilton's equations of H_g as a flat 4-vector derivative.

    Accepts a PhaseState or any length-4 sequence; returns ndarray
    (dx1, dx2, dp1, dp2).
    """
    c = Coupling.coerce(coupling)
    if isinstance(state, PhaseState):
        state = state.as_array()
    x1, x2, p1, p2 = np.asarray(state, dtype=float)
    if c.isotropic_mink:
        # H = eps*w*p_phi: pure rotation of both x and p
        eps = 1.0 if c.g >= 0 else -1.0
        ew = eps * omega
        return np.array([-ew * x2, ew * x1, -ew * p2, ew * p1])
    g = float(c.g)
    return np.array([
        p1 / m - g * omega * x2,
        p2 / m + g * omega * x1,
        -m * omega ** 2 * x1 - g * omega * p2,
        -m * omega ** 2 * x2 + g * omega * p1,
    ])


def hamiltonian_value(state, coupling, omega: float, m: float = 1.0) -> float:
    c = Coupling.coerce(coupling)
    if isinstance(state, PhaseState):
        state = state.as_array()
    x1, x2, p1, p2 = np.asarray(state, dtype=float)
    if c.isotropic_mink:
        eps = 1.0 if c.g >= 0 else -1.0
        return eps * omega * (x1 * p2 - x2 * p1)
    g = float(c.g)
    return ((p1 ** 2 + p2 ** 2) / (2 * m)
            + m * omega ** 2 * (x1 ** 2 + x2 ** 2) / 2
            + g * omega * (x1 * p2 - x2 * p1))


def integrate(state0, coupling, omega: float, T: float, steps: int = 4096,
              m: float = 1.0):
    """Fixed-step RK4 over [0, T]; returns (times, states[steps+1, 4]).

    Deterministic cross-check oracle for the closed form, not a production
    integrator.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    c = Coupling.coerce(coupling)
    y = state0.as_array() if isinstance(state0, PhaseState) else \
        np.asarray(state0, dtype=float).copy()
    h = T / steps
    ts = np.linspace(0.0, T, steps + 1)
    out = np.empty((steps + 1, 4))
    out[0] = y
    for n in range(steps):
        k1 = hamiltonian_flow_rhs(y, c, omega, m)
        k2 = hamiltonian_flow_rhs(y + 0.5 * h * k1, c, omega, m)
        k3 = hamiltonian_flow_rhs(y + 0.5 * h * k2, c, omega, m)
        k4 = hamiltonian_flow_rhs(y + h * k3, c, omega, m)
        y = y + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
        out[n + 1] = y
    return ts, out


def _fraction_gcd(a: Fraction, b: Fraction) -> Fraction:
    return Fraction(gcd(a.numerator, b.numerator),
                    (a.denominator * b.denominator)
                    // gcd(a.denominator, b.denominator))


def closure_turns(coupling) -> Fraction:
    """Closure period in units of 2*pi/omega, as an exact rational.

    Smallest T with w*ell_i*T in 2*pi*Z for every nonzero ell_i; the
    frozen mode of the |g| = 1 case only shifts the center and is skipped.
    """
    c = Coupling.coerce(coupling)
    ells = [abs(l) for l in (c.ell1, c.ell2) if l != 0]
    f = ells[0]
    for l in ells[1:]:
        f = _fraction_gcd(f, l)
    return 1 / f


def closure_period(coupling, omega: float = 1.0) -> float:
    """Smallest positive orbit period, in the same time units as 1/omega."""
    return float(closure_turns(coupling)) * 2.0 * math.pi / omega


def is_cusped(params: TrajectoryParams, rel_tol: float = 1e-9) -> bool:
    """True when the orbit has velocity zeros: R1|ell1| = R2|ell2|."""
    c = params.coupling
    a = params.R1 * abs(float(c.ell1))
    b = params.R2 * abs(float(c.ell2))
    return math.isclose(a, b, rel_tol=rel_tol, abs_tol=0.0)


def pass_through_origin(params: TrajectoryParams, rel_tol: float = 1e-9) -> bool:
    """True when the orbit reaches z = 0, i.e. R1 = R2 (p_phi = 0).

    The relative phase of the two epicycle terms winds monotonically
    (at rate w*(ell1 + ell2) = 2w), so equal radii always produce an exact
    cancellation somewhere on the orbit.
    """
    if params.R1 == params.R2 == 0.0:
        return True
    return math.isclose(params.R1, params.R2, rel_tol=rel_tol, abs_tol=0.0)


def minkowski_radius_sq(R1: float, R2: float, gamma1: float,
                        gamma2: float) -> float:
    """Squared radius of the |g| -> inf circular orbit (law of cosines)."""
    return R1 ** 2 + R2 ** 2 + 2 * R1 * R2 * math.cos(gamma1 + gamma2)


def conserved_values(params: TrajectoryParams, t: float = 0.0) -> dict:
    """All catalog integrals evaluated on the orbit at time t.

    Each value includes the generator's e^{i*mu*w*t} prefactor, so the
    returned numbers are time-independent; J0 and L2 are real.
    """
    b1p, b2m = _mode_values(params, t)
    point = {
        "b1+": complex(b1p), "b1-": complex(np.conj(b1p)),
        "b2-": complex(b2m), "b2+": complex(np.conj(b2m)),
    }
    alg_params = Params(Fraction(1), Fraction(params.omega))
    out = {}
    for name in GENERATOR_NAMES:
        gen = generator(name, params.coupling, alg_params)
        out[name] = gen.evaluate(point, t)
    out["H_g"] = params.omega * (
        float(params.coupling.ell1) * params.R1 ** 2
        + float(params.coupling.ell2) * params.R2 ** 2)
    return out


def _orbit(g, r1, r2, label) -> tuple:
    return (label, TrajectoryParams(R1=r1, R2=r2,
                                    coupling=Coupling(Fraction(g))))


# Orbit gallery spanning the three regimes; radius ratios chosen so rows
# b, e, h pass through the origin.
ORBIT_GALLERY = (
    _orbit("2/3", 1.0, 2.0, "a"),
    _orbit("1/3", 1.0, 1.0, "b"),
    _orbit("4/5", 2.0, 1.0, "c"),
    _orbit("1", 1.0, 2.0, "d"),
    _orbit("1", 1.0, 1.0, "e"),
    _orbit("1", 2.0, 1.0, "f"),
    _orbit("3/2", 1.0, 2.0, "g"),
    _orbit("3", 1.0, 1.0, "h"),
    _orbit("5/4", 2.0, 1.0, "i"),
)

# Large-ratio companions; rows a and d satisfy R1|ell1| = R2|ell2| and cusp.
CUSP_GALLERY = (
    _orbit("1/3", 1.0, 2.0, "a"),
    _orbit("1/2", 1.0, 6.0, "b"),
    _orbit("3/5", 1.0, 20.0, "c"),
    _orbit("3", 1.0, 2.0, "d"),
    _orbit("2", 1.0, 6.0, "e"),
    _orbit("5/3", 1.0, 20.0, "f"),
)


def gallery_params(which: str = "orbits") -> tuple:
    """Named fixtures: 'orbits' for the regime gallery, 'cusps' for the
    large-ratio set."""
    if which == "orbits":
        return ORBIT_GALLERY
    if which == "cusps":
        return CUSP_GALLERY
    raise ValueError(f"unknown gallery {which!r}")
