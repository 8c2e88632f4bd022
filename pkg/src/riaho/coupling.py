"""Coupling constant of the rotationally invariant anisotropic oscillator.

The model Hamiltonian is H_g = H_osc + g*omega*p_phi.  In circular-mode
variables it separates as H_g = omega*(ell1*N1 + ell2*N2) with frequency
weights ell1 = 1+g, ell2 = 1-g, so everything about spectra, degeneracies
and trajectory closure is controlled by the exact rational value of g.

For rational g with |g| != 1 the frequency ratio is rational and the model
carries hidden integrals built from coprime mode orders (s1, s2):

* 0 <= |g| < 1 ("euclidean" side): g = (s2 - s1)/(s1 + s2)
* |g| > 1 ("minkowskian" side):    g = (s1 + s2)/(s2 - s1)

g = 0 is the isotropic oscillator (s1 = s2 = 1); the isotropic limit on the
minkowskian side is |g| -> infinity, which is representable only as a flag,
not a finite rational.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

__all__ = ["Coupling", "Phase"]


class Phase:
    """Regime labels, a pure function of g."""

    ISOTROPIC = "isotropic"      # g = 0: ordinary 2D oscillator
    EUCLIDEAN = "euclidean"      # 0 < |g| < 1: both mode frequencies positive
    LANDAU = "landau"            # |g| = 1: one frozen mode, circular orbits
    MINKOWSKIAN = "minkowskian"  # |g| > 1: mode frequencies of opposite sign
    ISOTROPIC_MINK = "isotropic-minkowskian"  # |g| -> inf limit (flag only)


@dataclass(frozen=True)
class Coupling:
    """Exact rational anisotropy coupling g.

    Parameters
    ----------
    g : Fraction
        Coerced to an exact rational; strings like ``"2/3"``, ints and
        floats with exact binary representation are accepted by
        :meth:`coerce`.
    isotropic_mink : bool
        Marks the |g| -> infinity limit.  The stored g is then only a
        direction sign and must not be used numerically.
    """

    g: Fraction
    isotropic_mink: bool = False

    def __post_init__(self):
        if not isinstance(self.g, Fraction):
            object.__setattr__(self, "g", Fraction(self.g))

    @classmethod
    def coerce(cls, value) -> "Coupling":
        if isinstance(value, Coupling):
            return value
        if isinstance(value, str):
            return cls(Fraction(value))
        return cls(Fraction(value))

    @property
    def ell1(self) -> Fraction:
        # the |g| -> inf limit (after w -> w/|g|) has weights (+-1, -+1)
        if self.isotropic_mink:
            return Fraction(1 if self.g >= 0 else -1)
        return 1 + self.g

    @property
    def ell2(self) -> Fraction:
        if self.isotropic_mink:
            return Fraction(-1 if self.g >= 0 else 1)
        return 1 - self.g

    @property
    def phase(self) -> str:
        if self.isotropic_mink:
            return Phase.ISOTROPIC_MINK
        a = abs(self.g)
        if a == 0:
            return Phase.ISOTROPIC
        if a < 1:
            return Phase.EUCLIDEAN
        if a == 1:
            return Phase.LANDAU
        return Phase.MINKOWSKIAN

    @property
    def mode_orders(self) -> tuple[int, int] | None:
        """Coprime hidden-symmetry orders (s1, s2), or None at |g| = 1.

        Solves s1*ell1 = s2*ell2 off the minkowskian side and
        s1*ell1 = -s2*ell2 on it, in lowest terms.  Both phases give
        s1/s2 = |ell2|/|ell1| = |ell2/ell1| as positive integers.
        """
        if self.isotropic_mink:
            return (1, 1)
        if abs(self.g) == 1:
            return None
        r = abs(self.ell2 / self.ell1)
        s1, s2 = r.numerator, r.denominator
        d = gcd(s1, s2)
        return (s1 // d, s2 // d)

    @property
    def s1(self) -> int | None:
        orders = self.mode_orders
        return None if orders is None else orders[0]

    @property
    def s2(self) -> int | None:
        orders = self.mode_orders
        return None if orders is None else orders[1]

    def as_float(self) -> float:
        if self.isotropic_mink:
            raise ValueError("isotropic minkowskian limit has no finite g")
        return float(self.g)

    def __str__(self) -> str:
        if self.isotropic_mink:
            return "inf" if self.g >= 0 else "-inf"
        return str(self.g)
