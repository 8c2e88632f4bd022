"""Truncated Fock engine: spectrum, hidden ladders, mode bridges.

Frozen amplitudes below were derived by hand from the ladder algebra
(sqrt(n) / sqrt(n+1) factors) and from column-by-column application of the
factored one-mode bridge to low unnormalized states.
"""
import math
from fractions import Fraction

import numpy as np
import pytest

from riaho.coupling import Coupling
from riaho.phasealg.exact import ExactComplex
from riaho import fockeng as fe

F = Fraction


class TestBasis:
    def test_dim_and_roundtrip(self):
        b = fe.FockBasis(5)
        assert b.dim == 36
        for i in range(b.dim):
            assert b.index(*b.state(i)) == i

    def test_row_major_order(self):
        b = fe.FockBasis(2)
        assert b.states() == [
            (0, 0), (0, 1), (0, 2),
            (1, 0), (1, 1), (1, 2),
            (2, 0), (2, 1), (2, 2),
        ]
        assert b.index(1, 2) == 5

    def test_bounds(self):
        b = fe.FockBasis(3)
        with pytest.raises(IndexError):
            b.index(4, 0)
        with pytest.raises(IndexError):
            b.state(16)
        with pytest.raises(ValueError):
            fe.FockBasis(0)

    def test_vector(self):
        b = fe.FockBasis(2)
        v = b.vector(1, 1)
        assert v[b.index(1, 1)] == 1.0
        assert np.count_nonzero(v) == 1


class TestLadders:
    def test_raising_amplitude(self):
        b = fe.FockBasis(4)
        up = fe.ladder(b, 1, "+")
        v = up.apply(b.vector(2, 1))
        assert v[b.index(3, 1)] == pytest.approx(math.sqrt(3))

    def test_lowering_amplitude_and_vacuum(self):
        b = fe.FockBasis(4)
        dn = fe.ladder(b, 2, "-")
        v = dn.apply(b.vector(1, 3))
        assert v[b.index(1, 2)] == pytest.approx(math.sqrt(3))
        assert np.allclose(dn.apply(b.vector(2, 0)), 0.0)

    def test_canonical_commutator_interior(self):
        b = fe.FockBasis(6)
        mask = fe.InteriorMask(b, margin1=1)
        comm = fe.commutator(fe.ladder(b, 1, "-"), fe.ladder(b, 1, "+"))
        block = mask.restrict_columns(comm.matrix - np.eye(b.dim))
        assert fe.operator_norm(block) < 1e-14

    def test_modes_commute(self):
        b = fe.FockBasis(5)
        comm = fe.commutator(fe.ladder(b, 1, "+"), fe.ladder(b, 2, "-"))
        assert fe.operator_norm(comm.matrix) < 1e-14

    def test_validation(self):
        b = fe.FockBasis(3)
        with pytest.raises(ValueError):
            fe.ladder(b, 3, "+")
        with pytest.raises(ValueError):
            fe.ladder(b, 1, "up")

    def test_number_operator(self):
        b = fe.FockBasis(4)
        n1 = fe.number_operator(b, 1)
        up, dn = fe.ladder(b, 1, "+"), fe.ladder(b, 1, "-")
        # a+ a- equals the number operator exactly, even at the edge
        assert fe.operator_norm((up @ dn).matrix - n1.matrix) < 1e-14


class TestInteriorMask:
    def test_margins(self):
        b = fe.FockBasis(3)
        m = fe.InteriorMask(b, margin1=1, margin2=2)
        assert m.contains(2, 1)
        assert not m.contains(3, 0)
        assert not m.contains(0, 2)

    def test_total_budget(self):
        b = fe.FockBasis(4)
        m = fe.InteriorMask(b, total=2)
        assert set(m.states()) == {(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)}

    def test_restrict_shapes(self):
        b = fe.FockBasis(3)
        m = fe.InteriorMask(b, margin1=1, margin2=1)
        mat = np.arange(b.dim * b.dim, dtype=float).reshape(b.dim, b.dim)
        assert m.restrict_columns(mat).shape == (16, 9)
        assert m.restrict(mat).shape == (9, 9)

    def test_validation(self):
        b = fe.FockBasis(3)
        with pytest.raises(ValueError):
            fe.InteriorMask(b, margin1=-1)
        with pytest.raises(ValueError):
            fe.InteriorMask(b, margin2=4)


class TestSpectrum:
    def test_ground_state_energy(self):
        # zero-point level is hbar*omega for every coupling
        for g in (0, F(1, 3), 1, 3, F(-1, 2)):
            assert fe.exact_energy(Coupling(F(g)), 0, 0) == 1

    def test_frozen_levels(self):
        assert fe.exact_energy(Coupling(F(1, 2)), 1, 0) == F(5, 2)
        assert fe.exact_energy(Coupling(3), 0, 1) == -1
        assert fe.exact_energy(Coupling(F(1, 3)), 1, 0) == F(7, 3)
        assert fe.exact_energy(Coupling(F(1, 3)), 0, 2) == F(7, 3)

    def test_negative_quantum_numbers(self):
        with pytest.raises(ValueError):
            fe.exact_energy(Coupling(0), -1, 0)

    def test_hamiltonian_diagonal(self):
        b = fe.FockBasis(5)
        c = Coupling(F(2, 3))
        h = fe.hamiltonian(b, c)
        off = h.matrix - np.diag(np.diag(h.matrix))
        assert fe.operator_norm(off) == 0.0
        for n1, n2 in b.states():
            i = b.index(n1, n2)
            assert h.matrix[i, i] == pytest.approx(float(fe.exact_energy(c, n1, n2)))

    def test_hbar_omega_scaling(self):
        b = fe.FockBasis(3)
        h1 = fe.hamiltonian(b, Coupling(F(1, 2)), hbar_omega=1.0)
        h2 = fe.hamiltonian(b, Coupling(F(1, 2)), hbar_omega=2.5)
        assert fe.operator_norm(h2.matrix - 2.5 * h1.matrix) < 1e-14

    def test_angular_momentum_conserved(self):
        b = fe.FockBasis(6)
        for g in (0, F(1, 3), 3):
            comm = fe.commutator(fe.hamiltonian(b, Coupling(F(g))), fe.angular_momentum(b))
            assert fe.operator_norm(comm.matrix) == 0.0

    def test_angular_momentum_values(self):
        b = fe.FockBasis(3)
        pphi = fe.angular_momentum(b, hbar=1.0)
        assert pphi.matrix[b.index(3, 1), b.index(3, 1)] == 2


class TestDegeneracy:
    def test_resonant_pair(self):
        cls = {k.energy: k for k in fe.degeneracy_classes(Coupling(F(1, 3)), fe.FockBasis(6))}
        level = cls[F(7, 3)]
        assert level.states == ((0, 2), (1, 0))
        assert level.complete

    def test_isotropic_shell(self):
        cls = {k.energy: k for k in fe.degeneracy_classes(Coupling(0), fe.FockBasis(6))}
        assert cls[F(3)].states == ((0, 2), (1, 1), (2, 0))
        assert cls[F(3)].complete

    def test_landau_level_infinite(self):
        # l2 = 0: each level has one n1 and every n2, never complete
        cls = {k.energy: k for k in fe.degeneracy_classes(Coupling(1), fe.FockBasis(5))}
        level = cls[F(3)]
        assert level.states == tuple((1, n2) for n2 in range(6))
        assert not level.complete

    def test_supercritical_chain(self):
        cls = {k.energy: k for k in fe.degeneracy_classes(Coupling(3), fe.FockBasis(6))}
        level = cls[F(1)]
        assert level.states == ((0, 0), (1, 2), (2, 4), (3, 6))
        assert not level.complete

    def test_truncation_limited(self):
        # at cutoff 1 the partner (0, 2) of (1, 0) is off the grid
        cls = {k.energy: k for k in fe.degeneracy_classes(Coupling(F(1, 3)), fe.FockBasis(1))}
        level = cls[F(7, 3)]
        assert level.states == ((1, 0),)
        assert not level.complete

    def test_class_ids_ascend(self):
        classes = fe.degeneracy_classes(Coupling(F(1, 2)), fe.FockBasis(4))
        assert [k.class_id for k in classes] == list(range(len(classes)))
        energies = [k.energy for k in classes]
        assert energies == sorted(energies)

    def test_energy_window(self):
        classes = fe.degeneracy_classes(Coupling(0), fe.FockBasis(6), energy_window=(2, 3))
        assert [k.energy for k in classes] == [F(2), F(3)]
        assert classes[0].class_id == 0

    def test_spectrum_rows(self):
        rows = fe.spectrum_rows(Coupling(F(1, 3)), fe.FockBasis(3))
        assert len(rows) == 16
        assert set(rows[0]) == {"n1", "n2", "E_exact_num", "E_exact_den", "class_id"}
        assert rows[0]["n1"] == 0 and rows[0]["n2"] == 0
        assert rows[0]["E_exact_num"] == 1 and rows[0]["E_exact_den"] == 1
        by_state = {(r["n1"], r["n2"]): r for r in rows}
        assert by_state[(1, 0)]["class_id"] == by_state[(0, 2)]["class_id"]
        # exact energies reproduce from the integer columns
        for r in rows:
            assert F(r["E_exact_num"], r["E_exact_den"]) == fe.exact_energy(
                Coupling(F(1, 3)), r["n1"], r["n2"]
            )


class TestHiddenOperators:
    def test_frozen_examples(self):
        b = fe.FockBasis(8)
        c = Coupling(F(1, 3))
        lp = fe.hidden_operator(b, c, "L", 1, 2)
        v = lp.apply(b.vector(0, 2))
        assert v[b.index(1, 0)] == pytest.approx(math.sqrt(2))
        assert np.count_nonzero(np.abs(v) > 1e-14) == 1
        lm = fe.hidden_operator(b, c, "L", 1, 2, sign="-")
        assert np.allclose(lm.apply(b.vector(0, 2)), 0.0)
        jp = fe.hidden_operator(b, Coupling(3), "J", 1, 2)
        w = jp.apply(b.vector(0, 0))
        assert w[b.index(1, 2)] == pytest.approx(math.sqrt(2))

    def test_coefficient_formula_matches_matrix(self):
        b = fe.FockBasis(7)
        c = Coupling(F(1, 3))
        lp = fe.hidden_operator(b, c, "L", 1, 2).matrix
        for n1, n2 in b.states():
            coeff = fe.hidden_coefficient("L", 1, 2, n1, n2)
            j = b.index(n1, n2)
            if n2 >= 2 and n1 + 1 <= b.cutoff:
                assert lp[b.index(n1 + 1, n2 - 2), j] == pytest.approx(coeff, abs=1e-12)
            elif n2 < 2:
                assert coeff == 0.0
                assert np.allclose(lp[:, j], 0.0)

    def test_j_coefficient_formula(self):
        b = fe.FockBasis(7)
        jp = fe.hidden_operator(b, Coupling(3), "J", 1, 2).matrix
        for n1, n2 in b.states():
            if n1 + 1 <= b.cutoff and n2 + 2 <= b.cutoff:
                expected = math.sqrt(
                    math.factorial(n1 + 1) * math.factorial(n2 + 2)
                    / (math.factorial(n1) * math.factorial(n2))
                )
                got = jp[b.index(n1 + 1, n2 + 2), b.index(n1, n2)]
                assert got == pytest.approx(expected, rel=1e-12)
                assert fe.hidden_coefficient("J", 1, 2, n1, n2) == pytest.approx(
                    expected, rel=1e-12
                )

    def test_adjoint_pair(self):
        b = fe.FockBasis(6)
        c = Coupling(F(1, 3))
        lp = fe.hidden_operator(b, c, "L", 1, 2)
        lm = fe.hidden_operator(b, c, "L", 1, 2, sign="-")
        assert fe.operator_norm(lm.matrix - lp.matrix.conj().T) == 0.0

    def test_commutes_with_hamiltonian(self):
        # the commutator of the resonant ladder with the diagonal H vanishes
        # identically, truncation included, since it only links equal levels
        b = fe.FockBasis(8)
        for g, kind, s1, s2 in [
            (F(1, 3), "L", 1, 2),
            (F(1, 2), "L", 1, 3),
            (F(3), "J", 1, 2),
            (F(2), "J", 1, 3),
        ]:
            c = Coupling(g)
            x = fe.hidden_operator(b, c, kind, s1, s2)
            row = fe.verify_commutes(fe.hamiltonian(b, c), x, tol=1e-12)
            assert row.passed and row.residual <= 1e-12

    def test_resonance_mismatch_raises(self):
        b = fe.FockBasis(4)
        with pytest.raises(ValueError):
            fe.hidden_operator(b, Coupling(F(1, 3)), "L", 2, 1)
        with pytest.raises(ValueError):
            fe.hidden_operator(b, Coupling(F(1, 3)), "J", 1, 2)
        with pytest.raises(ValueError):
            fe.hidden_operator(b, Coupling(0), "J", 1, 1)

    def test_order_validation(self):
        b = fe.FockBasis(4)
        with pytest.raises(ValueError):
            fe.hidden_operator(b, Coupling(0), "L", 0, 0)
        with pytest.raises(ValueError):
            fe.hidden_operator(b, Coupling(F(1, 3)), "X", 1, 2)
        with pytest.raises(ValueError):
            fe.hidden_operator(b, Coupling(F(1, 3)), "L", 1, 2, sign="*")

    def test_raising_chain_terminates_only_for_l(self):
        b = fe.FockBasis(9)
        lp = fe.hidden_operator(b, Coupling(F(1, 3)), "L", 1, 2).matrix
        # walk the E = 13/3 chain: (0,4) -> (1,2) -> (2,0) -> annihilated
        v = b.vector(0, 4)
        for _ in range(2):
            v = lp @ v
            assert np.linalg.norm(v) > 0
        assert np.allclose(lp @ v, 0.0)
        # the J ladder never annihilates a grid state with room to grow
        jp = fe.hidden_operator(b, Coupling(3), "J", 1, 2).matrix
        for n1, n2 in b.states():
            if n1 + 1 <= b.cutoff and n2 + 2 <= b.cutoff:
                assert np.linalg.norm(jp[:, b.index(n1, n2)]) > 0


class TestOrbitStructure:
    @pytest.mark.parametrize(
        "g,kind,s1,s2",
        [(F(1, 3), "L", 1, 2), (F(3), "J", 1, 2), (F(1, 2), "L", 1, 3)],
    )
    def test_orbits_match_degeneracy_classes(self, g, kind, s1, s2):
        b = fe.FockBasis(8)
        c = Coupling(g)
        orbits = set(fe.hidden_orbit_partition(b, c, kind, s1, s2))
        classes = {frozenset(k.states) for k in fe.degeneracy_classes(c, b)}
        assert orbits == classes

    def test_masked_orbits(self):
        b = fe.FockBasis(8)
        c = Coupling(F(1, 3))
        mask = fe.InteriorMask(b, margin1=1, margin2=2)
        orbits = set(fe.hidden_orbit_partition(b, c, "L", 1, 2, mask=mask))
        pool = set(mask.states())
        classes = {
            frozenset(set(k.states) & pool)
            for k in fe.degeneracy_classes(c, b)
            if set(k.states) & pool
        }
        assert orbits == classes

    def test_mismatch_raises(self):
        b = fe.FockBasis(4)
        with pytest.raises(ValueError):
            fe.hidden_orbit_partition(b, Coupling(F(1, 3)), "J", 1, 2)


class TestCartesianModes:
    def test_canonical_algebra(self):
        b = fe.FockBasis(8)
        a = fe.cartesian_modes(b)
        mask = fe.InteriorMask(b, margin1=1, margin2=1)
        for j in ("1", "2"):
            comm = (
                a[f"a{j}-"].matrix @ a[f"a{j}+"].matrix
                - a[f"a{j}+"].matrix @ a[f"a{j}-"].matrix
            )
            assert fe.operator_norm(mask.restrict_columns(comm - np.eye(b.dim))) < 1e-13
        cross = (
            a["a1-"].matrix @ a["a2+"].matrix - a["a2+"].matrix @ a["a1-"].matrix
        )
        assert fe.operator_norm(mask.restrict_columns(cross)) < 1e-13

    def test_total_number_preserved(self):
        b = fe.FockBasis(6)
        a = fe.cartesian_modes(b)
        n_tot_a = a["a1+"].matrix @ a["a1-"].matrix + a["a2+"].matrix @ a["a2-"].matrix
        n_tot_b = (
            fe.number_operator(b, 1).matrix + fe.number_operator(b, 2).matrix
        )
        mask = fe.InteriorMask(b, total=b.cutoff - 1)
        assert fe.operator_norm(mask.restrict_columns(n_tot_a - n_tot_b)) < 1e-13

    def test_su2_algebra(self):
        b = fe.FockBasis(8)
        l1, l2, l3 = fe.su2_generators(b)
        mask = fe.InteriorMask(b, total=b.cutoff - 2)
        triples = [(l1, l2, l3), (l2, l3, l1), (l3, l1, l2)]
        for x, y, z in triples:
            comm = fe.commutator(x, y).matrix - 1j * z.matrix
            assert fe.operator_norm(mask.restrict_columns(comm)) < 1e-12

    def test_angular_momentum_is_2l2(self):
        b = fe.FockBasis(7)
        _, l2, _ = fe.su2_generators(b)
        mask = fe.InteriorMask(b, total=b.cutoff - 1)
        diff = fe.angular_momentum(b).matrix - 2 * l2.matrix
        assert fe.operator_norm(mask.restrict_columns(diff)) < 1e-12


class TestUnitaryBridge:
    def setup_method(self):
        self.b = fe.FockBasis(12)
        self.u = fe.unitary_bridge(self.b)
        self.ud = self.u.dagger()
        self.mask = fe.InteriorMask(self.b, total=self.b.cutoff - 2)
        self.idx = self.mask.indices()

    def _resid(self, lhs, rhs):
        return fe.operator_norm((lhs - rhs)[:, self.idx])

    def _conj(self, op):
        return self.u.matrix @ op @ self.ud.matrix

    def test_unitarity(self):
        eye = self.u.matrix @ self.ud.matrix
        assert fe.operator_norm(eye - np.eye(self.b.dim)) < 1e-12

    def test_mode_rotation(self):
        a = fe.cartesian_modes(self.b)
        ph = np.exp(-1j * math.pi / 4)
        pairs = [
            ("a1-", fe.ladder(self.b, 1, "-"), ph),
            ("a2-", fe.ladder(self.b, 2, "-"), ph),
            ("a1+", fe.ladder(self.b, 1, "+"), ph.conjugate()),
            ("a2+", fe.ladder(self.b, 2, "+"), ph.conjugate()),
        ]
        for name, target, phase in pairs:
            assert self._resid(self._conj(a[name].matrix), phase * target.matrix) < 1e-10

    def test_su2_cycling(self):
        l1, l2, l3 = fe.su2_generators(self.b)
        assert self._resid(self._conj(l1.matrix), l3.matrix) < 1e-10
        assert self._resid(self._conj(l2.matrix), l1.matrix) < 1e-10
        assert self._resid(self._conj(l3.matrix), l2.matrix) < 1e-10

    @pytest.mark.parametrize("g", [0, F(1, 3), F(1, 2), 3])
    def test_hamiltonian_equivalence(self, g):
        c = Coupling(F(g))
        h_rni = fe.rni_hamiltonian(self.b, c)
        h_g = fe.hamiltonian(self.b, c)
        assert self._resid(self._conj(h_rni.matrix), h_g.matrix) < 1e-10


class TestRniHamiltonian:
    def test_breaks_rotational_symmetry(self):
        b = fe.FockBasis(10)
        mask = fe.InteriorMask(b, total=b.cutoff - 2)
        comm = fe.commutator(
            fe.rni_hamiltonian(b, Coupling(F(1, 2))), fe.angular_momentum(b)
        )
        assert fe.operator_norm(mask.restrict_columns(comm.matrix)) > 0.1

    def test_isotropic_point_is_symmetric(self):
        b = fe.FockBasis(10)
        mask = fe.InteriorMask(b, total=b.cutoff - 2)
        comm = fe.commutator(
            fe.rni_hamiltonian(b, Coupling(0)), fe.angular_momentum(b)
        )
        assert fe.operator_norm(mask.restrict_columns(comm.matrix)) < 1e-12

    def test_hbar_omega_scaling(self):
        b = fe.FockBasis(4)
        h1 = fe.rni_hamiltonian(b, Coupling(F(1, 3)), hbar_omega=1.0)
        h3 = fe.rni_hamiltonian(b, Coupling(F(1, 3)), hbar_omega=3.0)
        assert fe.operator_norm(h3.matrix - 3.0 * h1.matrix) < 1e-13


class TestMatrixExponential:
    def test_diagonal_case(self):
        b = fe.FockBasis(3)
        n1 = fe.number_operator(b, 1)
        e = fe.matrix_exponential(1j * math.pi * n1.matrix)
        expected = np.diag([np.exp(1j * math.pi * s[0]) for s in b.states()])
        assert fe.operator_norm(e - expected) < 1e-12

    def test_norm_guard(self):
        with pytest.raises(ValueError):
            fe.matrix_exponential(np.eye(3) * 1e4)

    def test_operator_wrapper(self):
        b = fe.FockBasis(2)
        out = fe.matrix_exponential(fe.number_operator(b, 2) * 0.0)
        assert isinstance(out, fe.FockOperator)
        assert fe.operator_norm(out.matrix - np.eye(b.dim)) < 1e-14


class TestOneModeBridgeExact:
    def test_frozen_entries(self):
        s = fe.one_mode_bridge_unnormalized(5)
        one = ExactComplex.ONE
        sqrt2 = ExactComplex.sqrt2()
        assert s[0][0] == one
        assert s[1][1] == sqrt2
        assert s[0][2] == ExactComplex.coerce(-1)
        assert s[2][0] == ExactComplex.coerce(F(-1, 2))
        assert s[2][2] == ExactComplex.coerce(F(5, 2))
        # opposite parity never couples
        assert s[1][0].is_zero() and s[0][3].is_zero()

    def test_intertwining_exact(self):
        for row in fe.verify_one_mode_bridge(11):
            assert row.passed, row.check_id
            assert row.residual == 0.0


class TestQuantumBridgeFloat:
    def test_vacuum_amplitude(self):
        s = fe.one_mode_bridge(4)
        assert s[0, 0] == pytest.approx(2.0**0.25, rel=1e-15)

    def test_symmetric(self):
        s = fe.one_mode_bridge(6)
        assert np.max(np.abs(s - s.T)) < 1e-12

    def test_two_mode_intertwining(self):
        for row in fe.verify_quantum_bridge(10, margin=3):
            assert row.passed, row.check_id
            assert row.residual <= 1e-10
