"""Anisotropic two-frequency oscillators built by the per-coordinate bridge.

The rotationally invariant model (module fockeng) is unitarily equivalent to
ordinary anisotropic oscillators H^(sigma) = hbar*(w1*n1 + sigma*w2*n2 +
(w1+sigma*w2)/2) once the circular modes are rescaled mode by mode.  This
module covers that side of the story:

* ``FrequencyPair`` with exact or detected commensurability l1*w1 == l2*w2,
* signed-mode Hamiltonians and their exact spectra,
* hidden ladder operators L (sign +) and J (sign -) at commensurable
  frequencies, and the matching degeneracy-orbit structure,
* the so(1,1) invariant of the equal-frequency sign=- oscillator,
* the per-coordinate bridge sending monomials x1^n1 x2^n2 to product
  Hermite functions,
* Lissajous trajectories and their closure period,
* the anisotropic rescaling map that identifies the rotationally invariant
  Hamiltonian with a signed-mode oscillator at Omega_i = |ell_i|*omega.

Convention note: with l1*w1 == l2*w2 and coprime (l1, l2), the minimal
closure time of a Lissajous figure is T = 2*pi*l2/w1 = 2*pi*l1/w2 (w1*T and
w2*T are then the coprime multiples 2*pi*l2 and 2*pi*l1 of a full turn).
"""
from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bridge import ProportionalityReport, inverse_weierstrass
from .coupling import Coupling
from .fockeng import (
    FockBasis,
    FockOperator,
    InteriorMask,
    commutator,
    exact_energy,
    hidden_coefficient,
    ladder,
    operator_norm,
)
from .phasealg import (
    CANONICAL,
    ExactComplex,
    PhasePoly,
    poisson_bracket,
    rational_sqrt,
)
from .reports import CheckRow, VerificationReport

__all__ = [
    "FrequencyPair",
    "detect_commensurability",
    "spectrum",
    "signed_hamiltonian",
    "verify_signed_spectrum",
    "hidden_operator",
    "hidden_orbits",
    "degeneracy_partition",
    "so11_invariant_check",
    "SeparableState",
    "aniso_cbt_apply",
    "hermite_eigenstate",
    "mode_constant",
    "aniso_proportionality",
    "lissajous",
    "closure_period",
    "RescaleMap",
    "rescale_map",
    "rescale_canonical_check",
    "composite_spectrum_check",
]


# ---------------------------------------------------------------------------
# frequencies


def _coerce_frequency(value):
    """Exact rationals stay exact, everything else becomes a float."""
    if isinstance(value, bool):
        raise TypeError("frequency must be a number")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    return float(value)


def detect_commensurability(omega1, omega2, max_den: int = 64, tol: float = 1e-9):
    """Coprime (l1, l2) with l1*w1 == l2*w2, or None.

    Exact rational frequencies always have a rational ratio, so detection
    never fails for them (and no denominator cap applies).  Float inputs are
    rationalized by continued fractions with denominators capped at
    ``max_den`` and accepted only when the resonance mismatch
    |l1*w1 - l2*w2| stays below ``tol`` relative to the common value.
    """
    w1 = _coerce_frequency(omega1)
    w2 = _coerce_frequency(omega2)
    if w1 <= 0 or w2 <= 0:
        raise ValueError("frequencies must be positive")
    if isinstance(w1, Fraction) and isinstance(w2, Fraction):
        ratio = w1 / w2
        return ratio.denominator, ratio.numerator
    ratio = Fraction(float(w1) / float(w2)).limit_denominator(max_den)
    if ratio <= 0:
        return None
    l1, l2 = ratio.denominator, ratio.numerator
    lhs, rhs = l1 * float(w1), l2 * float(w2)
    if abs(lhs - rhs) > tol * max(abs(lhs), abs(rhs)):
        return None
    return l1, l2


@dataclass(frozen=True)
class FrequencyPair:
    """Pair of positive mode frequencies with optional commensurability.

    The coprime labels (l1, l2) satisfy w1/w2 = l2/l1, i.e. l1*w1 == l2*w2
    (exactly for rational frequencies, to 1e-12 relative for floats).
    Integer and Fraction frequencies are kept exact; floats stay floats.
    """

    omega1: Fraction | float
    omega2: Fraction | float
    l1: int | None = None
    l2: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "omega1", _coerce_frequency(self.omega1))
        object.__setattr__(self, "omega2", _coerce_frequency(self.omega2))
        if self.omega1 <= 0 or self.omega2 <= 0:
            raise ValueError("frequencies must be positive")
        if (self.l1 is None) != (self.l2 is None):
            raise ValueError("give both commensurability labels or neither")
        if self.l1 is None:
            return
        l1, l2 = int(self.l1), int(self.l2)
        object.__setattr__(self, "l1", l1)
        object.__setattr__(self, "l2", l2)
        if l1 <= 0 or l2 <= 0:
            raise ValueError("commensurability labels must be positive")
        if math.gcd(l1, l2) != 1:
            raise ValueError("commensurability labels must be coprime")
        if self.is_exact:
            if l1 * self.omega1 != l2 * self.omega2:
                raise ValueError("labels do not satisfy l1*w1 == l2*w2")
        else:
            lhs, rhs = l1 * float(self.omega1), l2 * float(self.omega2)
            if abs(lhs - rhs) > 1e-12 * max(abs(lhs), abs(rhs)):
                raise ValueError("labels do not satisfy l1*w1 == l2*w2")

    @classmethod
    def detect(cls, omega1, omega2, max_den: int = 64, tol: float = 1e-9):
        """Pair with labels filled in when a resonance is detected."""
        labels = detect_commensurability(omega1, omega2, max_den, tol)
        if labels is None:
            return cls(omega1, omega2)
        return cls(omega1, omega2, labels[0], labels[1])

    @property
    def is_exact(self) -> bool:
        return isinstance(self.omega1, Fraction) and isinstance(self.omega2, Fraction)

    @property
    def commensurate(self) -> bool:
        return self.l1 is not None

    @property
    def equal(self) -> bool:
        return self.omega1 == self.omega2


def _sign_value(sign) -> int:
    if sign in ("+", 1, +1):
        return 1
    if sign in ("-", -1):
        return -1
    raise ValueError("sign must be '+' or '-'")


# ---------------------------------------------------------------------------
# signed-mode Hamiltonians and spectra


def spectrum(freq: FrequencyPair, sign, n1: int, n2: int, hbar=1):
    """Energy hbar*(w1*n1 + sigma*w2*n2 + (w1 + sigma*w2)/2).

    Exact (Fraction) when the frequencies and hbar are exact rationals,
    float otherwise.  sign=+ spectra are positive; sign=- is unbounded
    below and vanishes on the diagonal n1 == n2 at equal frequencies.
    """
    if n1 < 0 or n2 < 0:
        raise ValueError("quantum numbers must be non-negative")
    sigma = _sign_value(sign)
    w1, w2 = freq.omega1, freq.omega2
    half = Fraction(1, 2) if freq.is_exact else 0.5
    return hbar * (w1 * n1 + sigma * w2 * n2 + (w1 + sigma * w2) * half)


def signed_hamiltonian(
    basis: FockBasis, freq: FrequencyPair, sign, hbar: float = 1.0
) -> FockOperator:
    """Diagonal H^(sigma) with the closed-formula spectrum.

    The diagonal entries are floats of the exact values, so commutators
    with resonant ladders vanish identically (degenerate levels share the
    same float).  The ladder-product construction is compared against this
    in :func:`verify_signed_spectrum`.
    """
    sigma = _sign_value(sign)
    diag = [float(spectrum(freq, sigma, n1, n2, hbar)) for (n1, n2) in basis.states()]
    return FockOperator(
        basis, np.diag(np.array(diag, dtype=complex)), f"H({'+' if sigma > 0 else '-'})"
    )


def verify_signed_spectrum(
    basis: FockBasis, freq: FrequencyPair, sign, hbar: float = 1.0
) -> CheckRow:
    """H^(sigma) assembled from ladder products matches the closed formula.

    Number operators built as a+ a- are exact on the whole grid (lowering
    first never leaves the truncation), so no interior mask is needed; the
    only residual is float squaring of sqrt(n) amplitudes.
    """
    sigma = _sign_value(sign)
    w1, w2 = float(freq.omega1), float(freq.omega2)
    num1 = ladder(basis, 1, "+").matrix @ ladder(basis, 1, "-").matrix
    num2 = ladder(basis, 2, "+").matrix @ ladder(basis, 2, "-").matrix
    built = hbar * (
        w1 * num1
        + sigma * w2 * num2
        + 0.5 * (w1 + sigma * w2) * np.eye(basis.dim)
    )
    residual = operator_norm(built - signed_hamiltonian(basis, freq, sign, hbar).matrix)
    return CheckRow(
        check_id="signed-spectrum",
        identity="diag(H^(sigma)) = hbar*(w1 n1 + sigma w2 n2 + (w1+sigma w2)/2)",
        passed=bool(residual <= 1e-12),
        residual=residual,
        detail=f"sign={sign}, cutoff={basis.cutoff}",
    )


# ---------------------------------------------------------------------------
# hidden ladder operators at commensurable frequencies


def _require_labels(freq: FrequencyPair) -> tuple[int, int]:
    if not freq.commensurate:
        raise ValueError(
            "frequencies carry no commensurability labels; "
            "hidden ladder operators need l1*w1 == l2*w2"
        )
    return freq.l1, freq.l2


def hidden_operator(
    basis: FockBasis, freq: FrequencyPair, kind: str, sign: str = "+"
) -> FockOperator:
    """Resonant ladder L+ = (a1+)^l1 (a2-)^l2 or J+ = (a1+)^l1 (a2+)^l2.

    Kind "L" commutes with the sign=+ Hamiltonian, kind "J" with sign=-;
    in both cases the operator only links exactly degenerate states, so the
    commutator vanishes on the full truncated grid, not just an interior.
    sign="-" returns the adjoint.  Matrix elements agree with
    :func:`riaho.fockeng.hidden_coefficient` at orders (l1, l2).
    """
    if kind not in ("L", "J"):
        raise ValueError("kind must be 'L' or 'J'")
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    l1, l2 = _require_labels(freq)
    up1 = ladder(basis, 1, "+").matrix
    mode2 = ladder(basis, 2, "-" if kind == "L" else "+").matrix
    mat = np.linalg.matrix_power(up1, l1) @ np.linalg.matrix_power(mode2, l2)
    if sign == "-":
        mat = mat.conj().T
    return FockOperator(basis, mat, f"{kind}{sign}({l1},{l2})")


def hidden_orbits(
    basis: FockBasis,
    freq: FrequencyPair,
    kind: str,
    mask: InteriorMask | None = None,
) -> list[frozenset]:
    """Connected components of the grid under the resonant ladder pair.

    The step is (l1, -l2) for kind "L" and (l1, l2) for kind "J"; two pool
    states are linked when one ladder application maps one onto the other.
    For commensurable frequencies these orbits coincide with the exact
    degeneracy classes of the matching signed Hamiltonian (the level sets
    are single arithmetic progressions, and a rectangular pool only cuts
    their head or tail).
    """
    if kind not in ("L", "J"):
        raise ValueError("kind must be 'L' or 'J'")
    l1, l2 = _require_labels(freq)
    step = (l1, -l2) if kind == "L" else (l1, l2)
    pool = set(basis.states() if mask is None else mask.states())
    seen: set[tuple[int, int]] = set()
    orbits = []
    for start in sorted(pool):
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            n1, n2 = frontier.pop()
            for fwd in (1, -1):
                nxt = (n1 + fwd * step[0], n2 + fwd * step[1])
                if nxt in pool and nxt not in comp:
                    comp.add(nxt)
                    frontier.append(nxt)
        seen |= comp
        orbits.append(frozenset(comp))
    return sorted(orbits, key=lambda c: min(c))


def degeneracy_partition(
    basis: FockBasis,
    freq: FrequencyPair,
    sign,
    mask: InteriorMask | None = None,
) -> list[frozenset]:
    """Grid states grouped by exact energy of H^(sigma).

    Requires exact rational frequencies; grouping floats by equality would
    silently split classes.  Sorted by the minimal member, like
    :func:`hidden_orbits`, so the two partitions compare directly.
    """
    if not freq.is_exact:
        raise ValueError("degeneracy grouping needs exact rational frequencies")
    pool = basis.states() if mask is None else mask.states()
    levels: dict[Fraction, set] = {}
    for n1, n2 in pool:
        levels.setdefault(spectrum(freq, sign, n1, n2), set()).add((n1, n2))
    return sorted((frozenset(s) for s in levels.values()), key=lambda c: min(c))


# ---------------------------------------------------------------------------
# so(1,1) invariant of the equal-frequency sign=- oscillator


def so11_invariant_check(
    omega=1.0, cutoff: int = 10, hbar: float = 1.0
) -> VerificationReport:
    """Invariance and bracket checks around L11 = x1 p2 + x2 p1.

    With equal frequencies the sign=- Hamiltonian commutes with
    L11 = i*hbar*(J+ - J-), J+- = a1+- a2+-, and {J0, J+-} closes on
    sl(2,R).  The normalization satisfying [J-, J+] = 2*J0 exactly is
    J0 = H_osc/(2*omega*hbar) = (n1 + n2 + 1)/2; the shifted grading
    (H_osc - hbar*omega)/(2*omega*hbar) obeys the same [J0, J+-] = +-J+-
    but picks up the identity in the lowering-raising bracket, which the
    report records explicitly.
    """
    if isinstance(omega, FrequencyPair):
        if not omega.equal:
            raise ValueError("so(1,1) invariant needs equal frequencies")
        w = float(omega.omega1)
    else:
        w = float(omega)
        if w <= 0:
            raise ValueError("frequency must be positive")

    basis = FockBasis(cutoff)
    freq = FrequencyPair(w, w, 1, 1)
    hminus = signed_hamiltonian(basis, freq, "-", hbar)
    hosc = signed_hamiltonian(basis, freq, "+", hbar)
    up1, dn1 = ladder(basis, 1, "+").matrix, ladder(basis, 1, "-").matrix
    up2, dn2 = ladder(basis, 2, "+").matrix, ladder(basis, 2, "-").matrix
    jplus = up1 @ up2
    jminus = dn1 @ dn2
    l11 = 1j * hbar * (jplus - jminus)

    # quadrature realization; the cross terms cancel identically because
    # mode-1 and mode-2 matrices are kron factors and commute exactly.
    sx = math.sqrt(hbar / (2.0 * w))
    sp = math.sqrt(hbar * w / 2.0)
    x1, p1 = sx * (up1 + dn1), 1j * sp * (up1 - dn1)
    x2, p2 = sx * (up2 + dn2), 1j * sp * (up2 - dn2)
    quad_residual = operator_norm(x1 @ p2 + x2 @ p1 - l11)

    mask = InteriorMask(basis, margin1=1, margin2=1)
    report = VerificationReport(suite="so11-invariant")
    report.add(
        CheckRow(
            check_id="so11-quadrature-form",
            identity="x1 p2 + x2 p1 = i hbar (J+ - J-)",
            passed=bool(quad_residual <= 1e-12),
            residual=quad_residual,
        )
    )
    inv = operator_norm(
        mask.restrict_columns(hminus.matrix @ l11 - l11 @ hminus.matrix)
    )
    report.add(
        CheckRow(
            check_id="so11-invariance",
            identity="[H(-), L11] = 0",
            passed=bool(inv <= 1e-12),
            residual=inv,
        )
    )
    # shifted grading generator used in the invariance statement
    j0_shift = (hosc.matrix - hbar * w * np.eye(basis.dim)) / (2.0 * w * hbar)
    for name, mat, sgn in (("raise", jplus, +1), ("lower", jminus, -1)):
        res = operator_norm(j0_shift @ mat - mat @ j0_shift - sgn * mat)
        report.add(
            CheckRow(
                check_id=f"sl2-{name}",
                identity=f"[J0, J{'+' if sgn > 0 else '-'}] = {'+' if sgn > 0 else '-'}J{'+' if sgn > 0 else '-'}",
                passed=bool(res <= 1e-12),
                residual=res,
            )
        )
    ladder_bracket = operator_norm(
        mask.restrict_columns(jminus @ jplus - jplus @ jminus - hosc.matrix / (w * hbar))
    )
    report.add(
        CheckRow(
            check_id="sl2-ladder-bracket",
            identity="[J-, J+] = H_osc/(hbar w) = 2 J0 + 1",
            passed=bool(ladder_bracket <= 1e-12),
            residual=ladder_bracket,
            detail="closes on the unshifted grading H_osc/(2 hbar w)",
        )
    )
    diag = operator_norm(commutator(hminus, hosc).matrix)
    report.add(
        CheckRow(
            check_id="diagonal-pair",
            identity="[H(-), H_osc] = 0",
            passed=bool(diag == 0.0),
            residual=diag,
        )
    )
    return report


# ---------------------------------------------------------------------------
# per-coordinate bridge: monomials to product Hermite functions


@dataclass(frozen=True)
class SeparableState:
    """Polynomial times a product Gaussian exp(-r1 x1^2 - r2 x2^2).

    ``poly`` maps (p1, p2) exponent pairs to complex coefficients.  The
    envelope is separable by construction; the polynomial factorizes for
    monomial input but is kept joint so sums of monomials stay closed.
    """

    poly: dict
    rate1: float
    rate2: float

    def __post_init__(self):
        clean = {}
        for key, coeff in self.poly.items():
            p1, p2 = int(key[0]), int(key[1])
            if p1 < 0 or p2 < 0:
                raise ValueError("negative exponent")
            c = complex(coeff)
            if c != 0:
                clean[(p1, p2)] = c
        object.__setattr__(self, "poly", clean)
        if self.rate1 <= 0 or self.rate2 <= 0:
            raise ValueError("Gaussian rates must be positive")

    def evaluate(self, x1, x2):
        x1 = np.asarray(x1, dtype=float)
        x2 = np.asarray(x2, dtype=float)
        total = np.zeros(np.broadcast(x1, x2).shape, dtype=complex)
        for (p1, p2), coeff in self.poly.items():
            total = total + coeff * x1**p1 * x2**p2
        out = total * np.exp(-self.rate1 * x1**2 - self.rate2 * x2**2)
        return out if out.shape else complex(out)

    def scale(self, factor) -> "SeparableState":
        return SeparableState(
            {k: factor * c for k, c in self.poly.items()}, self.rate1, self.rate2
        )


def _mode_bridge_poly(n: int, omega: float, m: float, hbar: float) -> dict:
    """One-coordinate bridge of x^n: grading, finite heat series, in x units.

    The grading rescale contributes 2^((n + 1/2)/2); the heat factor
    e^{d^2-operator} reduces to the exact inverse-Weierstrass series in the
    dimensionless variable x/lambda, lambda^2 = hbar/(m omega).
    """
    lam_sq = hbar / (m * omega)
    series = inverse_weierstrass(n).series
    pref = 2.0**0.25 * 2.0 ** (n / 2.0)
    return {p: pref * float(c) * lam_sq ** ((n - p) / 2.0) for p, c in series.items()}


def aniso_cbt_apply(
    phi, freq: FrequencyPair, m: float = 1.0, hbar: float = 1.0
) -> SeparableState:
    """Bridge a polynomial in (x1, x2) through the per-coordinate composition.

    ``phi`` is a monomial exponent pair (n1, n2) or a dict mapping such
    pairs to coefficients.  Each coordinate passes independently through
    grading rescale, the finite heat series at its own frequency, and the
    Gaussian e^{-m w_i x_i^2 / 2 hbar}; a monomial lands on a multiple of
    the product Hermite function psi_n1(x1) psi_n2(x2).
    """
    if isinstance(phi, tuple) and len(phi) == 2:
        phi = {phi: 1.0}
    if not isinstance(phi, dict):
        raise ValueError("input must be a monomial pair or exponent-to-coefficient dict")
    w1, w2 = float(freq.omega1), float(freq.omega2)
    joint: dict = {}
    for key, coeff in phi.items():
        try:
            n1, n2 = operator.index(key[0]), operator.index(key[1])
        except (TypeError, ValueError, IndexError):
            raise ValueError("exponents must be integer pairs") from None
        if n1 < 0 or n2 < 0:
            raise ValueError("negative exponent is not polynomial")
        c = complex(coeff)
        if c == 0:
            continue
        poly1 = _mode_bridge_poly(n1, w1, m, hbar)
        poly2 = _mode_bridge_poly(n2, w2, m, hbar)
        for p1, c1 in poly1.items():
            for p2, c2 in poly2.items():
                joint[(p1, p2)] = joint.get((p1, p2), 0j) + c * c1 * c2
    rate1 = m * w1 / (2.0 * hbar)
    rate2 = m * w2 / (2.0 * hbar)
    return SeparableState(joint, rate1, rate2)


def _mode_eigen_poly(n: int, omega: float, m: float, hbar: float) -> dict:
    lam_sq = hbar / (m * omega)
    norm = (math.pi * lam_sq) ** -0.25 / math.sqrt(2.0**n * math.factorial(n))
    series = inverse_weierstrass(n).series
    return {
        p: norm * 2.0**n * float(c) * lam_sq ** (-p / 2.0) for p, c in series.items()
    }


def hermite_eigenstate(
    n1: int, n2: int, freq: FrequencyPair, m: float = 1.0, hbar: float = 1.0
) -> SeparableState:
    """Normalized product eigenfunction psi_n1(x1; w1) psi_n2(x2; w2)."""
    if n1 < 0 or n2 < 0:
        raise ValueError("quantum numbers must be non-negative")
    w1, w2 = float(freq.omega1), float(freq.omega2)
    poly1 = _mode_eigen_poly(n1, w1, m, hbar)
    poly2 = _mode_eigen_poly(n2, w2, m, hbar)
    joint = {
        (p1, p2): c1 * c2 for p1, c1 in poly1.items() for p2, c2 in poly2.items()
    }
    return SeparableState(joint, m * w1 / (2.0 * hbar), m * w2 / (2.0 * hbar))


def mode_constant(n: int, omega: float, m: float = 1.0, hbar: float = 1.0) -> float:
    """Per-coordinate proportionality constant of the bridge.

    S x^n = c_n(omega) psi_n with c_n = 2^(1/4) (pi lam^2)^(1/4) lam^n
    sqrt(n!), lam^2 = hbar/(m omega); the two-coordinate constant is the
    product over modes.
    """
    lam_sq = hbar / (m * omega)
    return (
        2.0**0.25
        * (math.pi * lam_sq) ** 0.25
        * lam_sq ** (n / 2.0)
        * math.sqrt(math.factorial(n))
    )


def aniso_proportionality(
    n1: int,
    n2: int,
    freq: FrequencyPair,
    m: float = 1.0,
    hbar: float = 1.0,
    grid_points: int = 21,
    half_width: float = 3.0,
    floor: float = 1e-6,
    tol: float = 1e-9,
) -> ProportionalityReport:
    """Grid-constancy of aniso_cbt_apply(x1^n1 x2^n2) / eigenfunction.

    The reduced constant divides out the closed-form per-mode product, so
    it must equal 1 for every (n1, n2) and frequency pair.
    """
    bridged = aniso_cbt_apply((n1, n2), freq, m, hbar)
    eigen = hermite_eigenstate(n1, n2, freq, m, hbar)
    xs = np.linspace(-half_width, half_width, grid_points)
    x1, x2 = np.meshgrid(xs, xs, indexing="ij")
    psi = eigen.evaluate(x1, x2)
    phi = bridged.evaluate(x1, x2)
    keep = np.abs(psi) > floor
    ratios = phi[keep] / psi[keep]
    mean = np.mean(ratios)
    spread = float(np.max(np.abs(ratios - mean)) / abs(mean))
    expected = mode_constant(n1, float(freq.omega1), m, hbar) * mode_constant(
        n2, float(freq.omega2), m, hbar
    )
    return ProportionalityReport(
        n1=n1,
        n2=n2,
        constant=complex(mean),
        reduced_constant=complex(mean / expected),
        spread=spread,
        points_used=int(np.count_nonzero(keep)),
        passed=bool(spread <= tol),
    )


# ---------------------------------------------------------------------------
# Lissajous trajectories


def lissajous(A1, B1, A2, B2, freq: FrequencyPair, t):
    """x_i(t) = A_i cos(w_i t) + B_i sin(w_i t).

    The general classical solution for both signed Hamiltonians: the
    sign=- mode only flips the momentum relation, x_i still obeys
    x_i'' = -w_i^2 x_i, so the configuration-space curves coincide.
    """
    t = np.asarray(t, dtype=float)
    w1, w2 = float(freq.omega1), float(freq.omega2)
    x1 = A1 * np.cos(w1 * t) + B1 * np.sin(w1 * t)
    x2 = A2 * np.cos(w2 * t) + B2 * np.sin(w2 * t)
    if t.shape:
        return x1, x2
    return float(x1), float(x2)


def closure_period(freq: FrequencyPair):
    """Minimal common period 2 pi l2 / w1 = 2 pi l1 / w2, None if open.

    With l1*w1 == l2*w2 coprime, this T makes w1*T and w2*T the coprime
    multiples 2 pi l2 and 2 pi l1 of a full turn, so no shorter closure
    exists.
    """
    if not freq.commensurate:
        return None
    return 2.0 * math.pi * freq.l2 / float(freq.omega1)


# ---------------------------------------------------------------------------
# anisotropic rescaling of the rotationally invariant model


@dataclass(frozen=True)
class RescaleMap:
    """Mode-by-mode canonical rescaling x_i' = sqrt|ell_i| x_i, p_i' = p_i/sqrt|ell_i|.

    Carries H_g in circular modes onto the signed anisotropic oscillator
    with frequencies Omega_i = |ell_i| * omega and mode signs
    sigma_i = sign(ell_i).  Exact weight squares are kept as Fractions.
    """

    coupling: Coupling
    sigma: tuple[int, int]
    weight_sq: tuple[Fraction, Fraction]

    @property
    def weights(self) -> tuple[float, float]:
        return (math.sqrt(self.weight_sq[0]), math.sqrt(self.weight_sq[1]))

    def omegas(self, omega: float = 1.0) -> tuple[float, float]:
        return (float(self.weight_sq[0]) * omega, float(self.weight_sq[1]) * omega)

    def omega_factors(self) -> tuple[Fraction, Fraction]:
        """Exact frequency magnifications |ell_1|, |ell_2|."""
        return self.weight_sq

    def signed_form(self) -> tuple[FrequencyPair, str, bool]:
        """(frequency pair, sign, swapped) of the image Hamiltonian at omega=1.

        When ell_1 < 0 the positive-frequency mode is listed first, the pair
        is swapped (flag True) and the spectrum identification reads
        E_g(n1, n2) = spectrum(freq, sign, n2, n1).
        """
        f1, f2 = self.weight_sq
        s1, s2 = self.sigma
        if s1 > 0:
            pair = FrequencyPair.detect(f1, f2)
            return pair, ("+" if s2 > 0 else "-"), False
        pair = FrequencyPair.detect(f2, f1)
        return pair, "-", True

    def apply(self, x1: float, p1: float, x2: float, p2: float):
        """Transform a classical phase-space point."""
        w1, w2 = self.weights
        return (x1 * w1, p1 / w1, x2 * w2, p2 / w2)


def rescale_map(coupling) -> RescaleMap:
    """Rescaling data for coupling g; Landau values have a frozen mode."""
    coupling = Coupling.coerce(coupling)
    ell1, ell2 = coupling.ell1, coupling.ell2
    if ell1 == 0 or ell2 == 0:
        raise ValueError("Landau coupling: a rescaling weight vanishes")
    return RescaleMap(
        coupling=coupling,
        sigma=(1 if ell1 > 0 else -1, 1 if ell2 > 0 else -1),
        weight_sq=(abs(ell1), abs(ell2)),
    )


def _ring_sqrt(q: Fraction):
    """Exact square root in Q(i)[sqrt2] when q = r^2 or 2 r^2, else None."""
    root = rational_sqrt(q)
    if root is not None:
        return ExactComplex.coerce(root)
    root = rational_sqrt(q / 2)
    if root is not None:
        return ExactComplex.coerce(root) * ExactComplex.sqrt2()
    return None


def rescale_canonical_check(coupling) -> CheckRow:
    """Symbolic canonical-bracket table for the rescaling map.

    Builds x_i' = w_i x_i, p_i' = p_i / w_i as exact phase-space polynomials
    and verifies every canonical bracket {x_i', x_j'} = {p_i', p_j'} = 0,
    {x_i', p_j'} = delta_ij exactly.  The actual weights sqrt|ell_i| are used
    when they lie in the coefficient ring Q(i)[sqrt2]; otherwise the table is
    run over generic rational witness weights, which decides the same
    identity because every bracket is w-independent: {w x, p/w} = {x, p}.
    """
    the_map = rescale_map(coupling)
    exact1 = _ring_sqrt(the_map.weight_sq[0])
    exact2 = _ring_sqrt(the_map.weight_sq[1])
    if exact1 is not None and exact2 is not None:
        weight_pairs = [(exact1, exact2)]
        detail = "weights sqrt|ell_i| exact in the coefficient ring"
    else:
        weight_pairs = [
            (ExactComplex.coerce(Fraction(5, 7)), ExactComplex.coerce(Fraction(11, 3))),
            (ExactComplex.coerce(Fraction(2)), ExactComplex.coerce(Fraction(3, 2))),
        ]
        detail = "generic rational witness weights (bracket is weight-independent)"

    x1 = PhasePoly.variable("x1", CANONICAL)
    x2 = PhasePoly.variable("x2", CANONICAL)
    p1 = PhasePoly.variable("p1", CANONICAL)
    p2 = PhasePoly.variable("p2", CANONICAL)
    one = PhasePoly.constant(1, CANONICAL)
    zero = PhasePoly.zero(CANONICAL)

    ok = True
    for w1, w2 in weight_pairs:
        prim = [x1 * w1, x2 * w2, p1 * w1.inverse(), p2 * w2.inverse()]
        canon = {(0, 2): one, (1, 3): one}
        for i in range(4):
            for j in range(i + 1, 4):
                expected = canon.get((i, j), zero)
                if poisson_bracket(prim[i], prim[j]) != expected:
                    ok = False
    return CheckRow(
        check_id="rescale-canonical",
        identity="{x_i', p_j'} = delta_ij, {x', x'} = {p', p'} = 0",
        passed=ok,
        residual=0.0 if ok else None,
        detail=detail,
    )


def composite_spectrum_check(coupling, cutoff: int = 8) -> CheckRow:
    """Exact spectrum transport from H_g to the signed anisotropic image.

    The unitary mode change (module fockeng) and the rescaling map send
    H_g onto H^(sigma) at Omega_i = |ell_i| omega; in units of hbar*omega
    the energies ell_1 n_1 + ell_2 n_2 + 1 must reappear as the signed-mode
    formula state by state, hence as equal multisets over any grid.
    """
    coupling = Coupling.coerce(coupling)
    if coupling.isotropic_mink:
        raise ValueError("finite rational coupling required")
    the_map = rescale_map(coupling)
    freq, sign, swapped = the_map.signed_form()
    if not freq.is_exact:
        raise ValueError("exact rational coupling required")
    source = []
    image = []
    for n1 in range(cutoff + 1):
        for n2 in range(cutoff + 1):
            source.append(exact_energy(coupling, n1, n2))
            pair = (n2, n1) if swapped else (n1, n2)
            image.append(spectrum(freq, sign, *pair))
    ok = sorted(source) == sorted(image)
    return CheckRow(
        check_id="composite-spectrum",
        identity="spec(H_g) = spec(H^(sigma), Omega_i=|ell_i| w) with multiplicity",
        passed=ok,
        residual=0.0 if ok else None,
        detail=f"g={coupling.g}, grid (cutoff+1)^2 = {(cutoff + 1) ** 2} states",
    )
