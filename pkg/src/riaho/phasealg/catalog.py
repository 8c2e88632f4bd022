"""Named observables of H_g = omega*(ell1*N1 + ell2*N2) as exact polynomials.

Builds the sl(2,R) x u(1) generators, the su(2) rotation pair, the
quadratic one-mode pairs, the linear dynamical integrals, and the
higher-order hidden families, each as a :class:`PhasePoly` in the circular
basis with the matching exact time frequency mu (units of omega):

============================  ====================  ==================
observable                    monomial              mu
============================  ====================  ==================
J0                            (N1 + N2)/2           0
J+-                           b1^+- b2^+-           -+2
L2                            (N1 - N2)/2           0
L+-                           b1^+- b2^-+           -+2g
B_j^+-                        (b_j^+-)^2            -+2*ell_j
beta_j^+-                     b_j^+-                -+ell_j
L^+-_{s1,s2}                  (b1^+-)^s1(b2^-+)^s2  -+(s1*ell1-s2*ell2)
J^+-_{s1,s2}                  (b1^+-)^s1(b2^+-)^s2  -+(s1*ell1+s2*ell2)
============================  ====================  ==================

A member is a *true* (time-independent) integral exactly when its mu
vanishes, which for the hidden families is the commensurability condition
on (s1, s2) against g.
"""
from __future__ import annotations

from fractions import Fraction

from ..coupling import Coupling
from .exact import ExactComplex
from .poly import CIRCULAR, Params, PhasePoly

__all__ = [
    "hamiltonian", "angular_momentum", "generator", "catalog",
    "hidden_integral", "is_true_integral", "true_integral_coupling",
    "GENERATOR_NAMES",
]

_ZERO = Fraction(0)
_HALF = Fraction(1, 2)

# (exponent tuple b1+,b1-,b2+,b2-) -> named monomial content
GENERATOR_NAMES = ("J0", "J+", "J-", "L2", "L+", "L-",
                   "B1+", "B1-", "B2+", "B2-",
                   "beta1+", "beta1-", "beta2+", "beta2-")


def _mono(e, coeff, mu, params) -> PhasePoly:
    return PhasePoly(CIRCULAR, {(*e, Fraction(mu)): ExactComplex.coerce(coeff)},
                     params)


def hamiltonian(coupling, params=None) -> PhasePoly:
    """H_g = omega*(ell1*N1 + ell2*N2) in the circular basis."""
    c = Coupling.coerce(coupling)
    params = Params.coerce(params)
    w = params.omega
    return (_mono((1, 1, 0, 0), w * c.ell1, 0, params)
            + _mono((0, 0, 1, 1), w * c.ell2, 0, params))


def angular_momentum(params=None) -> PhasePoly:
    """p_phi = N1 - N2 (equals x1 p2 - x2 p1 in canonical variables)."""
    params = Params.coerce(params)
    return _mono((1, 1, 0, 0), 1, 0, params) - _mono((0, 0, 1, 1), 1, 0, params)


def generator(name: str, coupling, params=None) -> PhasePoly:
    """One catalog generator with its exact time-frequency tag."""
    c = Coupling.coerce(coupling)
    params = Params.coerce(params)
    l1, l2 = c.ell1, c.ell2
    table = {
        "J0":  ((1, 1, 0, 0), _HALF, _ZERO, (0, 0, 1, 1), _HALF),
        "L2":  ((1, 1, 0, 0), _HALF, _ZERO, (0, 0, 1, 1), -_HALF),
        "J+":  ((1, 0, 1, 0), 1, -(l1 + l2), None, None),
        "J-":  ((0, 1, 0, 1), 1, l1 + l2, None, None),
        "L+":  ((1, 0, 0, 1), 1, -(l1 - l2), None, None),
        "L-":  ((0, 1, 1, 0), 1, l1 - l2, None, None),
        "B1+": ((2, 0, 0, 0), 1, -2 * l1, None, None),
        "B1-": ((0, 2, 0, 0), 1, 2 * l1, None, None),
        "B2+": ((0, 0, 2, 0), 1, -2 * l2, None, None),
        "B2-": ((0, 0, 0, 2), 1, 2 * l2, None, None),
        "beta1+": ((1, 0, 0, 0), 1, -l1, None, None),
        "beta1-": ((0, 1, 0, 0), 1, l1, None, None),
        "beta2+": ((0, 0, 1, 0), 1, -l2, None, None),
        "beta2-": ((0, 0, 0, 1), 1, l2, None, None),
    }
    if name not in table:
        raise ValueError(f"unknown generator {name!r}")
    e, coeff, mu, e2, coeff2 = table[name]
    out = _mono(e, coeff, mu, params)
    if e2 is not None:
        out = out + _mono(e2, coeff2, mu, params)
    return out


def catalog(coupling, params=None) -> dict:
    """All named generators for one coupling, keyed by name."""
    return {n: generator(n, coupling, params) for n in GENERATOR_NAMES}


def hidden_integral(coupling, kind: str, s1: int, s2: int, sign: str = "+",
                    params=None) -> PhasePoly:
    """Higher-order ladder product L^sign_{s1,s2} or J^sign_{s1,s2}.

    kind "L": (b1^+)^s1 (b2^-)^s2 with mu = -(s1*ell1 - s2*ell2);
    kind "J": (b1^+)^s1 (b2^+)^s2 with mu = -(s1*ell1 + s2*ell2);
    sign "-" gives the complex conjugate (mu flips).
    """
    if s1 < 0 or s2 < 0 or (s1 == 0 and s2 == 0):
        raise ValueError("orders must be non-negative and not both zero")
    if kind not in ("L", "J"):
        raise ValueError(f"kind must be 'L' or 'J', got {kind!r}")
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    c = Coupling.coerce(coupling)
    params = Params.coerce(params)
    if kind == "L":
        e = (s1, 0, 0, s2)
        mu = -(s1 * c.ell1 - s2 * c.ell2)
    else:
        e = (s1, 0, s2, 0)
        mu = -(s1 * c.ell1 + s2 * c.ell2)
    out = _mono(e, 1, mu, params)
    return out.conjugate() if sign == "-" else out


def is_true_integral(coupling, kind: str, s1: int, s2: int) -> bool:
    """mu = 0 test: s1*ell1 = s2*ell2 (L) or s1*ell1 = -s2*ell2 (J)."""
    c = Coupling.coerce(coupling)
    if kind == "L":
        return s1 * c.ell1 == s2 * c.ell2
    if kind == "J":
        return s1 * c.ell1 == -s2 * c.ell2
    raise ValueError(f"kind must be 'L' or 'J', got {kind!r}")


def true_integral_coupling(kind: str, s1: int, s2: int) -> Fraction | None:
    """The unique g making L^pm_{s1,s2} (or J^pm_{s1,s2}) time-independent.

    L-type: g = (s2 - s1)/(s1 + s2); J-type: g = (s1 + s2)/(s2 - s1),
    undefined (None) when s1 = s2.
    """
    if kind == "L":
        return Fraction(s2 - s1, s1 + s2)
    if kind == "J":
        if s1 == s2:
            return None
        return Fraction(s1 + s2, s2 - s1)
    raise ValueError(f"kind must be 'L' or 'J', got {kind!r}")
