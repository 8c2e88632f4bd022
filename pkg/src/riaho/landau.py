"""Parameter maps onto the magnetic and rotating-frame realizations.

The coupled-rotation oscillator H_g = H_osc + g*omega*p_phi, restricted to
|g| finite, is the same system as

* a charged particle in a uniform magnetic field plus an extra quadratic
  potential Lambda*x^2/2 per axis (omegaB = qB/2mc carries the sign of qB):
  subcritical confinement omegaB^2 + Lambda > 0 maps to (omega, g) via
  omega = sqrt(omegaB^2 + Lambda), g = omegaB/omega;
* a plane oscillator of spring constant k >= 0 in a frame rotating at
  signed angular frequency Omega, via omegaB -> Omega, Lambda -> k/m -
  Omega^2.

The boundary Lambda = -omegaB^2 is the critical (free-in-rotating-frame)
case and Lambda < -omegaB^2 is supercritical; both are classification-only
branches with continuous spectra.  Since omegaB^2 + Lambda = omega^2 on the
image of the forward map, round trips are exact for rational (g, omega) and
good to float tolerance otherwise.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .coupling import Coupling, Phase
from .phasealg.exact import rational_sqrt

__all__ = [
    "CRITICAL",
    "SUPERCRITICAL",
    "LandauExtension",
    "RotatingFrame",
    "PhaseResult",
    "landau_to_g",
    "g_to_landau",
    "rotating_frame_to_g",
    "classify",
]

CRITICAL = "critical"
SUPERCRITICAL = "supercritical"


def _coerce_real(value, name: str):
    """Ints and Fractions stay exact; all other numbers become floats."""
    if isinstance(value, bool):
        raise TypeError(f"{name} must be a number")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite")
    return value


def _sqrt(value):
    """Square root, exact Fraction when the input is a rational square."""
    if isinstance(value, Fraction):
        root = rational_sqrt(value)
        if root is not None:
            return root
    return math.sqrt(float(value))


@dataclass(frozen=True)
class LandauExtension:
    """Signed cyclotron half-frequency omegaB and quadratic strength Lambda."""

    omegaB: Fraction | float
    Lambda: Fraction | float

    def __post_init__(self):
        object.__setattr__(self, "omegaB", _coerce_real(self.omegaB, "omegaB"))
        object.__setattr__(self, "Lambda", _coerce_real(self.Lambda, "Lambda"))

    @property
    def is_exact(self) -> bool:
        return isinstance(self.omegaB, Fraction) and isinstance(self.Lambda, Fraction)


@dataclass(frozen=True)
class RotatingFrame:
    """Plane oscillator (spring k >= 0, mass m > 0) seen from a rotating frame."""

    k: Fraction | float
    m: Fraction | float
    Omega: Fraction | float

    def __post_init__(self):
        object.__setattr__(self, "k", _coerce_real(self.k, "k"))
        object.__setattr__(self, "m", _coerce_real(self.m, "m"))
        object.__setattr__(self, "Omega", _coerce_real(self.Omega, "Omega"))
        if self.k < 0:
            raise ValueError("spring constant k must be non-negative")
        if self.m <= 0:
            raise ValueError("mass must be positive")


@dataclass(frozen=True)
class PhaseResult:
    """Outcome of a parameter map.

    ``phase`` is one of the Coupling phase labels ("euclidean", "landau",
    "minkowskian") for confined systems, or "critical"/"supercritical".
    ``omega`` is the trap frequency on the confined branch and the
    magnitude |omega| = sqrt(-(omegaB^2+Lambda)) on the supercritical one;
    ``g`` is set only when confined.  Exact inputs give exact fields
    whenever the involved square roots are rational.
    """

    phase: str
    omega: Fraction | float | None = None
    g: Fraction | float | None = None

    @property
    def coupling(self) -> Coupling:
        if self.g is None:
            raise ValueError(f"{self.phase} branch carries no finite coupling")
        return Coupling.coerce(self.g)


def landau_to_g(ext: LandauExtension) -> PhaseResult:
    """Classify a Landau extension and extract (omega, g) when confined.

    Total on all inputs: omegaB^2 + Lambda > 0 is the confined branch with
    omega = sqrt(omegaB^2 + Lambda) and g = omegaB/omega (so the defining
    relation |Lambda| = |1 - g^2| omega^2 holds and sign g = sign omegaB);
    equality is critical; below it supercritical with |omega| reported.
    """
    s = ext.omegaB * ext.omegaB + ext.Lambda
    if s < 0:
        return PhaseResult(phase=SUPERCRITICAL, omega=_sqrt(-s))
    if s == 0:
        return PhaseResult(phase=CRITICAL)
    omega = _sqrt(s)
    if isinstance(omega, Fraction) and isinstance(ext.omegaB, Fraction):
        g = ext.omegaB / omega
    else:
        g = float(ext.omegaB) / float(omega)
    if ext.Lambda > 0:
        phase = Phase.EUCLIDEAN
    elif ext.Lambda == 0:
        phase = Phase.LANDAU
    else:
        phase = Phase.MINKOWSKIAN
    return PhaseResult(phase=phase, omega=omega, g=g)


def g_to_landau(coupling, omega) -> LandauExtension:
    """Landau-extension parameters of the coupling: omegaB = g w, Lambda = (1-g^2) w^2.

    Rejects the isotropic-Minkowskian limit flag (|g| infinite needs the
    rescaled limit, not this map).  Exact for rational inputs; round-trips
    through :func:`landau_to_g` exactly there because omegaB^2 + Lambda is
    then the perfect square omega^2.
    """
    coupling = Coupling.coerce(coupling)
    if coupling.isotropic_mink:
        raise ValueError("isotropic-Minkowskian limit has no finite coupling")
    w = _coerce_real(omega, "omega")
    if w <= 0:
        raise ValueError("omega must be positive")
    g = coupling.g
    if isinstance(w, Fraction):
        return LandauExtension(g * w, (1 - g * g) * w * w)
    gf = float(g)
    return LandauExtension(gf * w, (1.0 - gf * gf) * w * w)


def rotating_frame_to_g(frame: RotatingFrame) -> PhaseResult:
    """Map a rotating-frame oscillator to the coupling parameters.

    Identifies omegaB with Omega and the effective quadratic strength with
    k/m - Omega^2, so g = Omega/sqrt(k/m) with the sign of Omega; k = 0
    with Omega != 0 lands exactly on the critical case (free particle in a
    rotating frame), and supercritical never occurs since k >= 0.
    """
    return landau_to_g(LandauExtension(frame.Omega, frame.k / frame.m - frame.Omega * frame.Omega))


def classify(Lambda, omegaB) -> str:
    """Phase label of the (Lambda, omegaB) plane; boundaries get their own names.

    One of "euclidean", "landau", "minkowskian", "critical",
    "supercritical".  The isotropic point omegaB = 0, Lambda > 0 counts as
    euclidean (it is the g = 0 interior point of that phase).
    """
    return landau_to_g(LandauExtension(omegaB, Lambda)).phase
