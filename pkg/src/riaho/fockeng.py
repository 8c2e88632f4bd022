"""Truncated two-mode Fock-space engine.

The basis is the number basis of the circular modes, in which the rotating
oscillator Hamiltonian is diagonal with exact rational spectrum
``E/(hbar*omega) = l1*n1 + l2*n2 + 1`` where ``l1 = 1+g`` and ``l2 = 1-g``.
Everything here is dense numpy on a finite grid ``0 <= n1, n2 <= cutoff``;
exact statements (energies, degeneracy grouping) use Fractions so equality
of levels is never a floating-point question.

Truncation corrupts matrix elements near the grid edge, so checks that
involve raising operators are restricted to interior columns via
:class:`InteriorMask`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.linalg

from .coupling import Coupling
from .phasealg.exact import ExactComplex
from .phasealg.catalog import is_true_integral
from .reports import CheckRow

__all__ = [
    "FockBasis",
    "FockOperator",
    "InteriorMask",
    "DegeneracyClass",
    "ladder",
    "number_operator",
    "hamiltonian",
    "exact_energy",
    "angular_momentum",
    "degeneracy_classes",
    "spectrum_rows",
    "hidden_operator",
    "hidden_coefficient",
    "hidden_orbit_partition",
    "commutator",
    "verify_commutes",
    "operator_norm",
    "matrix_exponential",
    "cartesian_modes",
    "su2_generators",
    "unitary_bridge",
    "rni_hamiltonian",
    "one_mode_bridge_unnormalized",
    "one_mode_bridge",
    "verify_one_mode_bridge",
    "verify_quantum_bridge",
]


# ---------------------------------------------------------------------------
# basis and operator containers


@dataclass(frozen=True)
class FockBasis:
    """Two-mode number basis truncated at ``cutoff`` quanta per mode.

    States are ordered row-major over (n1, n2), i.e. index = n1*(cutoff+1)+n2.
    """

    cutoff: int

    def __post_init__(self):
        if not isinstance(self.cutoff, int) or self.cutoff < 1:
            raise ValueError("cutoff must be a positive integer")

    @property
    def dim(self) -> int:
        return (self.cutoff + 1) ** 2

    def index(self, n1: int, n2: int) -> int:
        if not (0 <= n1 <= self.cutoff and 0 <= n2 <= self.cutoff):
            raise IndexError(f"state ({n1}, {n2}) outside cutoff {self.cutoff}")
        return n1 * (self.cutoff + 1) + n2

    def state(self, i: int) -> tuple[int, int]:
        if not 0 <= i < self.dim:
            raise IndexError(f"index {i} outside basis of dimension {self.dim}")
        return divmod(i, self.cutoff + 1)

    def states(self):
        """All (n1, n2) pairs in index order."""
        side = self.cutoff + 1
        return [(n1, n2) for n1 in range(side) for n2 in range(side)]

    def vector(self, n1: int, n2: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=complex)
        v[self.index(n1, n2)] = 1.0
        return v


@dataclass(frozen=True)
class FockOperator:
    """Dense operator on a :class:`FockBasis`."""

    basis: FockBasis
    matrix: np.ndarray
    label: str = ""

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=complex)
        if mat.shape != (self.basis.dim, self.basis.dim):
            raise ValueError(
                f"matrix shape {mat.shape} does not match basis dim {self.basis.dim}"
            )
        object.__setattr__(self, "matrix", mat)

    def _check(self, other: "FockOperator"):
        if self.basis != other.basis:
            raise ValueError("operators live on different bases")

    def __add__(self, other):
        if not isinstance(other, FockOperator):
            return NotImplemented
        self._check(other)
        return FockOperator(self.basis, self.matrix + other.matrix)

    def __sub__(self, other):
        if not isinstance(other, FockOperator):
            return NotImplemented
        self._check(other)
        return FockOperator(self.basis, self.matrix - other.matrix)

    def __mul__(self, scalar):
        if isinstance(scalar, (int, float, complex, Fraction)):
            return FockOperator(self.basis, self.matrix * complex(scalar))
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return FockOperator(self.basis, -self.matrix)

    def __matmul__(self, other):
        if isinstance(other, FockOperator):
            self._check(other)
            return FockOperator(self.basis, self.matrix @ other.matrix)
        if isinstance(other, np.ndarray):
            return self.matrix @ other
        return NotImplemented

    def dagger(self) -> "FockOperator":
        return FockOperator(self.basis, self.matrix.conj().T, self.label + "^+")

    def apply(self, vec: np.ndarray) -> np.ndarray:
        return self.matrix @ vec

    def norm(self) -> float:
        return operator_norm(self.matrix)


@dataclass(frozen=True)
class InteriorMask:
    """Column selector keeping states safely away from the truncation edge.

    A state (n1, n2) is interior when ``n1 + margin1 <= cutoff`` and
    ``n2 + margin2 <= cutoff``; if ``total`` is set it must additionally
    satisfy ``n1 + n2 <= total``.  The total budget is the right notion for
    number-conserving conjugation checks, the per-mode margins for ladder
    compositions with a known per-mode reach.
    """

    basis: FockBasis
    margin1: int = 0
    margin2: int = 0
    total: int | None = None

    def __post_init__(self):
        if self.margin1 < 0 or self.margin2 < 0:
            raise ValueError("margins must be non-negative")
        if self.margin1 > self.basis.cutoff or self.margin2 > self.basis.cutoff:
            raise ValueError("margin exceeds cutoff, interior is empty")

    def contains(self, n1: int, n2: int) -> bool:
        if n1 + self.margin1 > self.basis.cutoff:
            return False
        if n2 + self.margin2 > self.basis.cutoff:
            return False
        if self.total is not None and n1 + n2 > self.total:
            return False
        return True

    def states(self) -> list[tuple[int, int]]:
        return [s for s in self.basis.states() if self.contains(*s)]

    def indices(self) -> np.ndarray:
        return np.array(
            [self.basis.index(n1, n2) for (n1, n2) in self.states()], dtype=int
        )

    def restrict_columns(self, matrix: np.ndarray) -> np.ndarray:
        return np.asarray(matrix)[:, self.indices()]

    def restrict(self, matrix: np.ndarray) -> np.ndarray:
        idx = self.indices()
        return np.asarray(matrix)[np.ix_(idx, idx)]


# ---------------------------------------------------------------------------
# elementary operators


def ladder(basis: FockBasis, mode: int, direction: str) -> FockOperator:
    """Raising ("+") or lowering ("-") operator for mode 1 or 2."""
    if mode not in (1, 2):
        raise ValueError("mode must be 1 or 2")
    if direction not in ("+", "-"):
        raise ValueError("direction must be '+' or '-'")
    side = basis.cutoff + 1
    mat = np.zeros((basis.dim, basis.dim), dtype=complex)
    for n1 in range(side):
        for n2 in range(side):
            j = basis.index(n1, n2)
            n = n1 if mode == 1 else n2
            if direction == "+":
                if n < basis.cutoff:
                    tgt = (n1 + 1, n2) if mode == 1 else (n1, n2 + 1)
                    mat[basis.index(*tgt), j] = math.sqrt(n + 1)
            else:
                if n > 0:
                    tgt = (n1 - 1, n2) if mode == 1 else (n1, n2 - 1)
                    mat[basis.index(*tgt), j] = math.sqrt(n)
    return FockOperator(basis, mat, f"b{mode}{direction}")


def number_operator(basis: FockBasis, mode: int) -> FockOperator:
    if mode not in (1, 2):
        raise ValueError("mode must be 1 or 2")
    diag = np.array(
        [n1 if mode == 1 else n2 for (n1, n2) in basis.states()], dtype=float
    )
    return FockOperator(basis, np.diag(diag).astype(complex), f"n{mode}")


def exact_energy(coupling: Coupling, n1: int, n2: int) -> Fraction:
    """Level of state (n1, n2) in units of hbar*omega, exactly."""
    if n1 < 0 or n2 < 0:
        raise ValueError("quantum numbers must be non-negative")
    return coupling.ell1 * n1 + coupling.ell2 * n2 + 1


def hamiltonian(
    basis: FockBasis, coupling: Coupling, hbar_omega: float = 1.0
) -> FockOperator:
    """Diagonal rotating-oscillator Hamiltonian, entries hbar*omega*(l1 n1 + l2 n2 + 1)."""
    diag = np.array(
        [float(exact_energy(coupling, n1, n2)) for (n1, n2) in basis.states()]
    )
    return FockOperator(basis, np.diag(hbar_omega * diag).astype(complex), "H_g")


def angular_momentum(basis: FockBasis, hbar: float = 1.0) -> FockOperator:
    """Conserved angular momentum, diagonal with entries hbar*(n1 - n2)."""
    diag = np.array([float(n1 - n2) for (n1, n2) in basis.states()])
    return FockOperator(basis, np.diag(hbar * diag).astype(complex), "p_phi")


# ---------------------------------------------------------------------------
# spectrum and degeneracy structure


@dataclass(frozen=True)
class DegeneracyClass:
    """One exact energy level with all grid states belonging to it.

    ``complete`` is True when the grid holds every state of the level;
    levels of infinite multiplicity (which occur whenever some mode
    frequency is non-positive) are never complete.
    """

    energy: Fraction
    states: tuple[tuple[int, int], ...]
    class_id: int
    complete: bool


def _level_is_complete(coupling: Coupling, energy: Fraction, cutoff: int) -> bool:
    l1, l2 = coupling.ell1, coupling.ell2
    if l1 <= 0 or l2 <= 0:
        return False
    c = energy - 1
    n1_max = int(c / l1)  # Fraction floor division toward zero; c/l1 >= 0 here
    for n1 in range(n1_max + 1):
        rem = (c - l1 * n1) / l2
        if rem < 0:
            continue
        if rem.denominator == 1:
            n2 = int(rem)
            if n1 > cutoff or n2 > cutoff:
                return False
    return True


def degeneracy_classes(
    coupling: Coupling,
    basis: FockBasis,
    energy_window: tuple | None = None,
) -> list[DegeneracyClass]:
    """Group grid states into exact-energy classes, ascending in energy.

    ``energy_window`` is an optional inclusive (lo, hi) pair in units of
    hbar*omega; either end may be None.  States within a class are ordered
    by ascending n1, and ``class_id`` numbers the returned classes from 0
    in ascending energy order.
    """
    groups: dict[Fraction, list[tuple[int, int]]] = {}
    for n1, n2 in basis.states():
        groups.setdefault(exact_energy(coupling, n1, n2), []).append((n1, n2))

    lo, hi = (None, None) if energy_window is None else energy_window
    energies = sorted(groups)
    out = []
    for energy in energies:
        if lo is not None and float(energy) < float(lo):
            continue
        if hi is not None and float(energy) > float(hi):
            continue
        states = tuple(sorted(groups[energy]))
        out.append(
            DegeneracyClass(
                energy=energy,
                states=states,
                class_id=len(out),
                complete=_level_is_complete(coupling, energy, basis.cutoff),
            )
        )
    return out


def spectrum_rows(coupling: Coupling, basis: FockBasis) -> list[dict]:
    """Flat per-state spectrum listing with exact energies and class ids.

    Rows are ordered by (energy, n1) ascending; each row maps the column
    names used by the spectrum export: n1, n2, E_exact_num, E_exact_den,
    class_id.
    """
    rows = []
    for cls in degeneracy_classes(coupling, basis):
        for n1, n2 in cls.states:
            rows.append(
                {
                    "n1": n1,
                    "n2": n2,
                    "E_exact_num": cls.energy.numerator,
                    "E_exact_den": cls.energy.denominator,
                    "class_id": cls.class_id,
                }
            )
    return rows


# ---------------------------------------------------------------------------
# hidden symmetry operators


def _validate_orders(s1: int, s2: int):
    if not (isinstance(s1, int) and isinstance(s2, int)):
        raise ValueError("orders must be integers")
    if s1 < 0 or s2 < 0 or (s1 == 0 and s2 == 0):
        raise ValueError("orders must be non-negative and not both zero")


def hidden_operator(
    basis: FockBasis,
    coupling: Coupling,
    kind: str,
    s1: int,
    s2: int,
    sign: str = "+",
) -> FockOperator:
    """Ladder-composed integral of motion L^(+/-)_{s1,s2} or J^(+/-)_{s1,s2}.

    Kind "L" composes s1 raisings of mode 1 with s2 lowerings of mode 2 and
    commutes with the Hamiltonian when s1*l1 = s2*l2; kind "J" composes
    raisings on both modes and requires s1*l1 + s2*l2 = 0.  A coupling that
    does not satisfy the matching resonance raises ValueError.
    """
    if kind not in ("L", "J"):
        raise ValueError("kind must be 'L' or 'J'")
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    _validate_orders(s1, s2)
    if not is_true_integral(coupling, kind, s1, s2):
        raise ValueError(
            f"orders ({s1}, {s2}) are not resonant with coupling {coupling}"
        )
    up1 = ladder(basis, 1, "+").matrix
    m2 = ladder(basis, 2, "-" if kind == "L" else "+").matrix
    mat = np.linalg.matrix_power(up1, s1) @ np.linalg.matrix_power(m2, s2)
    op = FockOperator(basis, mat, f"{kind}+_{s1}{s2}")
    if sign == "-":
        op = FockOperator(basis, op.matrix.conj().T, f"{kind}-_{s1}{s2}")
    return op


def hidden_coefficient(kind: str, s1: int, s2: int, n1: int, n2: int) -> float:
    """Amplitude of the '+' hidden operator on state (n1, n2).

    Kind "L" sends (n1, n2) to (n1+s1, n2-s2) with amplitude
    sqrt(n2! (n1+s1)! / (n1! (n2-s2)!)), zero when n2 < s2; kind "J" sends
    it to (n1+s1, n2+s2) with amplitude sqrt((n1+s1)! (n2+s2)! / (n1! n2!)).
    """
    if kind not in ("L", "J"):
        raise ValueError("kind must be 'L' or 'J'")
    _validate_orders(s1, s2)
    if kind == "L":
        if n2 - s2 < 0:
            return 0.0
        ratio = Fraction(math.factorial(n1 + s1), math.factorial(n1)) * Fraction(
            math.factorial(n2), math.factorial(n2 - s2)
        )
    else:
        ratio = Fraction(math.factorial(n1 + s1), math.factorial(n1)) * Fraction(
            math.factorial(n2 + s2), math.factorial(n2)
        )
    return math.sqrt(ratio)


def hidden_orbit_partition(
    basis: FockBasis,
    coupling: Coupling,
    kind: str,
    s1: int,
    s2: int,
    mask: InteriorMask | None = None,
) -> list[frozenset]:
    """Orbits of grid states under the hidden ladder pair and its adjoint.

    Two states are linked when the '+' operator maps one to the other with
    both endpoints on the grid (or inside ``mask`` when given).  Returns
    the connected components as frozensets, sorted by their minimal state.
    """
    if kind not in ("L", "J"):
        raise ValueError("kind must be 'L' or 'J'")
    _validate_orders(s1, s2)
    if not is_true_integral(coupling, kind, s1, s2):
        raise ValueError(
            f"orders ({s1}, {s2}) are not resonant with coupling {coupling}"
        )
    step = (s1, -s2) if kind == "L" else (s1, s2)
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


# ---------------------------------------------------------------------------
# commutators and norms


def commutator(a: FockOperator, b: FockOperator) -> FockOperator:
    a._check(b)
    return FockOperator(a.basis, a.matrix @ b.matrix - b.matrix @ a.matrix)


def operator_norm(matrix: np.ndarray) -> float:
    """Spectral norm."""
    return float(np.linalg.norm(np.asarray(matrix), 2))


def verify_commutes(
    a: FockOperator,
    b: FockOperator,
    mask: InteriorMask | None = None,
    tol: float = 1e-12,
    check_id: str = "commutator",
    identity: str = "[A, B] = 0",
) -> CheckRow:
    """Check [a, b] = 0 on interior columns, returning a report row."""
    comm = commutator(a, b).matrix
    if mask is not None:
        comm = mask.restrict_columns(comm)
    residual = operator_norm(comm)
    return CheckRow(
        check_id=check_id,
        identity=identity,
        passed=bool(residual <= tol),
        residual=residual,
    )


def matrix_exponential(op: FockOperator | np.ndarray) -> FockOperator | np.ndarray:
    """Dense matrix exponential with overflow and finiteness guards."""
    mat = op.matrix if isinstance(op, FockOperator) else np.asarray(op, dtype=complex)
    norm = operator_norm(mat)
    if norm > 700.0:
        raise ValueError(f"exponential argument norm {norm:.3g} would overflow")
    out = scipy.linalg.expm(mat)
    if not np.all(np.isfinite(out)):
        raise ValueError("matrix exponential produced non-finite entries")
    if isinstance(op, FockOperator):
        return FockOperator(op.basis, out, f"exp({op.label})")
    return out


# ---------------------------------------------------------------------------
# Cartesian modes, su(2) bridge, and the non-invariant form


def cartesian_modes(basis: FockBasis) -> dict[str, FockOperator]:
    """Cartesian-mode ladders expressed in the circular number basis.

    a1- = (b1- + b2-)/sqrt(2) and a2- = i (b1- - b2-)/sqrt(2), with the
    raisings their adjoints.  These satisfy the standard two-mode ladder
    algebra on the interior of the grid.
    """
    b1m = ladder(basis, 1, "-").matrix
    b2m = ladder(basis, 2, "-").matrix
    a1m = (b1m + b2m) / math.sqrt(2)
    a2m = 1j * (b1m - b2m) / math.sqrt(2)
    return {
        "a1-": FockOperator(basis, a1m, "a1-"),
        "a1+": FockOperator(basis, a1m.conj().T, "a1+"),
        "a2-": FockOperator(basis, a2m, "a2-"),
        "a2+": FockOperator(basis, a2m.conj().T, "a2+"),
    }


def su2_generators(basis: FockBasis) -> tuple[FockOperator, FockOperator, FockOperator]:
    """Schwinger su(2) generators built on the Cartesian modes.

    L1 = (a1+ a2- + a2+ a1-)/2, L2 = (a1+ a2- - a2+ a1-)/(2i),
    L3 = (a1+ a1- - a2+ a2-)/2.  The conserved angular momentum is 2*hbar*L2.
    """
    a = cartesian_modes(basis)
    up1, dn1 = a["a1+"].matrix, a["a1-"].matrix
    up2, dn2 = a["a2+"].matrix, a["a2-"].matrix
    l1 = (up1 @ dn2 + up2 @ dn1) / 2
    l2 = (up1 @ dn2 - up2 @ dn1) / 2j
    l3 = (up1 @ dn1 - up2 @ dn2) / 2
    return (
        FockOperator(basis, l1, "L1"),
        FockOperator(basis, l2, "L2"),
        FockOperator(basis, l3, "L3"),
    )


def unitary_bridge(basis: FockBasis) -> FockOperator:
    """Unitary rotating the Cartesian modes into the circular modes.

    U = exp(i (2 pi/3)/sqrt(3) (L1 + L2 + L3)): a 2pi/3 rotation about the
    diagonal su(2) axis, cycling L1 -> L3 -> L2 -> L1 and conjugating each
    Cartesian ladder into the matching circular ladder times exp(+/- i pi/4).
    All conjugation identities hold on a total-number interior mask.
    """
    l1, l2, l3 = su2_generators(basis)
    axis = (l1.matrix + l2.matrix + l3.matrix) / math.sqrt(3)
    u = matrix_exponential(1j * (2 * math.pi / 3) * axis)
    return FockOperator(basis, u, "U")


def rni_hamiltonian(
    basis: FockBasis, coupling: Coupling, hbar_omega: float = 1.0
) -> FockOperator:
    """Rotationally non-invariant anisotropic form of the same spectrum.

    H = hbar*omega*(l1 a1+ a1- + l2 a2+ a2- + 1) on the Cartesian modes;
    unitarily equivalent to the rotating-oscillator Hamiltonian but lacking
    [H, p_phi] = 0 away from g = 0.
    """
    a = cartesian_modes(basis)
    mat = float(coupling.ell1) * (a["a1+"].matrix @ a["a1-"].matrix)
    mat = mat + float(coupling.ell2) * (a["a2+"].matrix @ a["a2-"].matrix)
    mat = mat + np.eye(basis.dim)
    return FockOperator(basis, hbar_omega * mat, "H_rni")


# ---------------------------------------------------------------------------
# one-mode oscillator bridge, exact and floating


def _exact_zero(n: int) -> list[list[ExactComplex]]:
    return [[ExactComplex.ZERO for _ in range(n)] for _ in range(n)]


def _exact_matmul(a, b):
    n = len(a)
    out = _exact_zero(n)
    for i in range(n):
        for k in range(n):
            aik = a[i][k]
            if aik.is_zero():
                continue
            row = b[k]
            for j in range(n):
                if not row[j].is_zero():
                    out[i][j] = out[i][j] + aik * row[j]
    return out


def _exact_unnorm_ladders(n: int):
    """One-mode ladders in the unnormalized basis |n)' = (a+)^n |0)."""
    up = _exact_zero(n)
    dn = _exact_zero(n)
    one = ExactComplex.ONE
    for k in range(n - 1):
        up[k + 1][k] = one
        dn[k][k + 1] = ExactComplex.coerce(k + 1)
    return up, dn


def one_mode_bridge_unnormalized(size: int) -> list[list[ExactComplex]]:
    """Exact one-mode bridge matrix, unnormalized basis, 2^(1/4) factored out.

    S' = exp(-a+^2/2) * diag(2^(n/2)) * exp(-a^2/2) evaluated entrywise:
    S'[i, j] = sum over k = i-2a = j-2b >= 0 of
    (-1)^a/(2^a a!) * 2^(k/2) * (-1)^b j!/(2^b b! k!), which lies in the
    quadratic ring Q(i)[sqrt 2].  S'[0, 0] = 1.
    """
    s = _exact_zero(size)
    for i in range(size):
        for j in range(size):
            if (i - j) % 2:
                continue
            acc = ExactComplex.ZERO
            k = min(i, j)
            while k >= 0:
                a = (i - k) // 2
                b = (j - k) // 2
                coeff = Fraction((-1) ** (a + b), 2**a * math.factorial(a)) * Fraction(
                    math.factorial(j), 2**b * math.factorial(b) * math.factorial(k)
                )
                # diag factor 2^(k/2): exact power of 2 for even k, extra sqrt2 for odd
                term = coeff * Fraction(2) ** (k // 2)
                if k % 2:
                    acc = acc + ExactComplex(Fraction(0), Fraction(0), term, Fraction(0))
                else:
                    acc = acc + ExactComplex(term, Fraction(0), Fraction(0), Fraction(0))
                k -= 2
            s[i][j] = acc
    return s


def _one_mode_conformal_exact(size: int):
    """Exact one-mode generator pairs for the bridge intertwining check.

    Returns ((H, iD, K), (Kminus, K0, Kplus)) as unnormalized-basis exact
    matrices: H = -(a+ - a)^2/4, iD = (a^2 - a+^2)/4, K = (a+ + a)^2/4,
    and K- = a^2/2, K0 = (n + 1/2)/2, K+ = a+^2/2.
    """
    up, dn = _exact_unnorm_ladders(size)
    quarter = ExactComplex.coerce(Fraction(1, 4))
    half = ExactComplex.coerce(Fraction(1, 2))

    def add(a, b, ca=ExactComplex.ONE, cb=ExactComplex.ONE):
        return [
            [ca * a[i][j] + cb * b[i][j] for j in range(size)] for i in range(size)
        ]

    def scale(a, c):
        return [[c * a[i][j] for j in range(size)] for i in range(size)]

    up2 = _exact_matmul(up, up)
    dn2 = _exact_matmul(dn, dn)
    num = _exact_matmul(up, dn)
    minus = ExactComplex.coerce(-1)
    # H = -(up^2 + dn^2 - 2n - 1)/4,  K = (up^2 + dn^2 + 2n + 1)/4
    ident = _exact_zero(size)
    for i in range(size):
        ident[i][i] = ExactComplex.ONE
    sym = add(up2, dn2)
    two_n_plus_1 = add(scale(num, ExactComplex.coerce(2)), ident)
    h = scale(add(sym, two_n_plus_1, minus, ExactComplex.ONE), quarter)
    kk = scale(add(sym, two_n_plus_1), quarter)
    i_d = scale(add(dn2, up2, ExactComplex.ONE, minus), quarter)
    k_minus = scale(dn2, half)
    k_plus = scale(up2, half)
    k0 = _exact_zero(size)
    for n in range(size):
        k0[n][n] = ExactComplex.coerce(Fraction(2 * n + 1, 4))
    return (h, i_d, kk), (k_minus, k0, k_plus)


def verify_one_mode_bridge(size: int = 11) -> list[CheckRow]:
    """Exact intertwining S'X = YS' for the one-mode conformal triple.

    Checks (X, Y) in {(H, -K-), (iD, K0), (K, K+)} entrywise over the
    quadratic ring on columns 0..size-3 (the raising parts of X corrupt the
    last two columns of the truncated product).  Residual is exactly zero
    or the check fails.
    """
    s = one_mode_bridge_unnormalized(size)
    (h, i_d, kk), (k_minus, k0, k_plus) = _one_mode_conformal_exact(size)
    minus = ExactComplex.coerce(-1)
    neg_k_minus = [[minus * k_minus[i][j] for j in range(size)] for i in range(size)]
    pairs = [
        ("bridge-one-mode-H", "S H = -K_- S", h, neg_k_minus),
        ("bridge-one-mode-iD", "S iD = K_0 S", i_d, k0),
        ("bridge-one-mode-K", "S K = K_+ S", kk, k_plus),
    ]
    rows = []
    for check_id, identity, x, y in pairs:
        lhs = _exact_matmul(s, x)
        rhs = _exact_matmul(y, s)
        ok = True
        # raising parts of X corrupt the last two columns of SX; the
        # lowering Y pulls truncated rows into YS, so trim both edges
        for j in range(size - 2):
            for i in range(size - 2):
                if lhs[i][j] != rhs[i][j]:
                    ok = False
        rows.append(
            CheckRow(
                check_id=check_id,
                identity=identity,
                passed=ok,
                residual=0.0 if ok else None,
            )
        )
    return rows


def one_mode_bridge(cutoff: int) -> np.ndarray:
    """One-mode bridge matrix in the normalized number basis, as floats.

    Entries are S[i, j] = 2^(1/4) * ring(i, j) * sqrt(i! j!) where
    ring(i, j) = S'[i, j]/j! is exact; each float entry therefore carries
    only a few ulp of rounding.
    """
    size = cutoff + 1
    s_un = one_mode_bridge_unnormalized(size)
    out = np.zeros((size, size))
    quarter_two = 2.0**0.25
    for i in range(size):
        for j in range(size):
            entry = s_un[i][j]
            if entry.is_zero():
                continue
            ring = entry * ExactComplex.coerce(Fraction(1, math.factorial(j)))
            val = ring.to_complex().real
            out[i, j] = (
                quarter_two
                * val
                * math.sqrt(math.factorial(i) * math.factorial(j))
            )
    return out


def _kron_ops(cutoff: int):
    """Per-mode float ladders assembled into the two-mode Cartesian grid."""
    size = cutoff + 1
    up1 = np.diag(np.sqrt(np.arange(1, size)), -1)
    dn1 = up1.T.copy()
    eye = np.eye(size)
    up_a = np.kron(up1, eye)
    dn_a = np.kron(dn1, eye)
    up_b = np.kron(eye, up1)
    dn_b = np.kron(eye, dn1)
    return up_a, dn_a, up_b, dn_b


def verify_quantum_bridge(cutoff: int = 10, margin: int = 3) -> list[CheckRow]:
    """Intertwining checks for the two-mode bridge, floating point.

    Builds S = S1 (x) S1 on the Cartesian product grid and verifies
    S H_free = -J_- S, S iD = J_0 S, S K = J_+ S with operator-norm
    residuals on columns with both occupation numbers <= cutoff - margin.
    """
    s1 = one_mode_bridge(cutoff)
    s = np.kron(s1, s1)
    up_a, dn_a, up_b, dn_b = _kron_ops(cutoff)
    size = cutoff + 1

    def quad(up, dn, sign):
        d = up + sign * dn
        return d @ d

    h_free = -0.25 * (quad(up_a, dn_a, -1) + quad(up_b, dn_b, -1))
    k_op = 0.25 * (quad(up_a, dn_a, +1) + quad(up_b, dn_b, +1))
    i_d = 0.25 * ((dn_a @ dn_a - up_a @ up_a) + (dn_b @ dn_b - up_b @ up_b))
    j_minus = 0.5 * (dn_a @ dn_a + dn_b @ dn_b)
    j_plus = 0.5 * (up_a @ up_a + up_b @ up_b)
    j0 = 0.5 * (up_a @ dn_a + up_b @ dn_b + np.eye(size * size))

    keep = [
        i * size + j
        for i in range(size - margin)
        for j in range(size - margin)
    ]
    grid = np.ix_(keep, keep)
    pairs = [
        ("bridge-two-mode-H", "S H_free = -J_- S", h_free, -j_minus),
        ("bridge-two-mode-iD", "S iD = J_0 S", i_d, j0),
        ("bridge-two-mode-K", "S K = J_+ S", k_op, j_plus),
    ]
    rows = []
    for check_id, identity, x, y in pairs:
        resid = (s @ x - y @ s)[grid]
        scale = max(operator_norm((s @ x)[grid]), 1.0)
        residual = operator_norm(resid) / scale
        rows.append(
            CheckRow(
                check_id=check_id,
                identity=identity,
                passed=bool(residual <= 1e-10),
                residual=residual,
            )
        )
    return rows
