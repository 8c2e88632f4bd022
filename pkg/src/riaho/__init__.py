"""Rotationally invariant anisotropic harmonic oscillator toolkit.

Exact symbolic phase-space algebra, classical trajectories, truncated Fock
matrices, the conformal-bridge wavefunction map, anisotropic-oscillator
spectra, and the coupling-parameter dictionary to Landau-type systems.
"""
from .coupling import Coupling, Phase

__all__ = ["Coupling", "Phase"]
__version__ = "0.1.0"
