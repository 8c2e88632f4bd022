"""Generator catalog: bracket table, Casimirs, hidden integral families."""
from fractions import Fraction as F

import pytest

from riaho.coupling import Coupling, Phase
from riaho.phasealg import (CIRCULAR, ExactComplex, PhasePoly,
                            angular_momentum, catalog, generator, hamiltonian,
                            hidden_integral, is_true_integral,
                            poisson_bracket, reduce_to_cartan,
                            total_time_derivative, true_integral_coupling,
                            verify_casimirs, verify_dynamical_integrals,
                            verify_sp4_table)

I = ExactComplex.I


def test_hamiltonian_decomposition():
    # H_g = H_osc + g*w*p_phi = w*(2 J0 + 2 g L2)
    g = F(2, 3)
    h = hamiltonian(g)
    j0 = generator("J0", g)
    l2 = generator("L2", g)
    assert h == 2 * j0 + (2 * g) * l2
    # and p_phi = 2 L2
    assert angular_momentum() == 2 * l2


@pytest.mark.parametrize("g", [F(0), F(1, 3), F(1, 2), F(1), F(3), F(-2, 5)])
def test_sp4_table_all_identities(g):
    checks = verify_sp4_table(g)
    assert len(checks) == 29
    assert all(c.passed for c in checks), \
        [c.identity_name for c in checks if not c.passed]


def test_selected_structure_constants():
    cat = catalog(F(1, 3))
    assert poisson_bracket(cat["J-"], cat["J+"]) == -2 * I * cat["J0"]
    assert poisson_bracket(cat["L+"], cat["L-"]) == -2 * I * cat["L2"]
    assert poisson_bracket(cat["J0"], cat["L2"]).is_zero()
    assert poisson_bracket(cat["B1-"], cat["B1+"]) == \
        -4 * I * (cat["J0"] + cat["L2"])
    assert poisson_bracket(cat["L2"], cat["B2+"]) == I * cat["B2+"]


@pytest.mark.parametrize("g", [F(0), F(1, 3), F(1), F(5, 4)])
def test_casimir_identities(g):
    checks = verify_casimirs(g)
    assert len(checks) == 4
    assert all(c.passed for c in checks)


@pytest.mark.parametrize("g", [F(0), F(1, 3), F(2, 3), F(1), F(3), F(-1, 2)])
def test_all_generators_are_dynamical_integrals(g):
    checks = verify_dynamical_integrals(g)
    assert all(c.passed for c in checks), \
        [c.identity_name for c in checks if not c.passed]


def test_report_serialization_keys():
    row = verify_sp4_table(F(1, 3))[0].to_dict()
    assert set(row) == {"identity_name", "lhs", "rhs", "residual", "pass"}
    assert row["pass"] is True
    assert row["residual"] == "0"


def test_linear_integrals_match_mode_frequencies():
    # beta_j^+ rotates against mode j's frequency ell_j
    g = F(1, 4)
    c = Coupling(g)
    b1 = generator("beta1+", g)
    assert b1.frequencies() == {-c.ell1}
    b2 = generator("beta2-", g)
    assert b2.frequencies() == {c.ell2}


class TestHiddenIntegrals:
    def test_shape_and_frequency(self):
        g = F(1, 3)
        lp = hidden_integral(g, "L", 1, 2)
        assert list(lp.terms) == [(1, 0, 0, 2, F(0))]  # mu = -(l1 - 2 l2) = 0
        jp = hidden_integral(g, "J", 1, 2)
        # mu = -(l1 + 2 l2) = -(4/3 + 4/3) = -8/3
        assert list(jp.terms) == [(1, 0, 2, 0, F(-8, 3))]

    def test_conjugate_flag(self):
        lm = hidden_integral(F(1, 3), "L", 1, 2, sign="-")
        assert list(lm.terms) == [(0, 1, 2, 0, F(0))]

    def test_reduces_to_su2_pair_at_g0(self):
        assert hidden_integral(0, "L", 1, 1) == generator("L+", 0)
        assert hidden_integral(0, "L", 1, 1, sign="-") == generator("L-", 0)

    @pytest.mark.parametrize("g,kind,s1,s2", [
        (F(1, 3), "L", 1, 2), (F(3, 5), "L", 1, 4), (F(0), "L", 1, 1),
        (F(3), "J", 1, 2), (F(2), "J", 1, 3), (F(5, 3), "J", 1, 4),
    ])
    def test_true_integrals_commute_with_hamiltonian(self, g, kind, s1, s2):
        assert is_true_integral(g, kind, s1, s2)
        h = hamiltonian(g)
        for sign in "+-":
            a = hidden_integral(g, kind, s1, s2, sign)
            assert a.frequencies() == {F(0)}
            assert total_time_derivative(a, h).is_zero()

    def test_dynamical_but_not_true_off_resonance(self):
        g = F(1, 2)  # L-resonance needs (s1,s2) = (1,3)
        a = hidden_integral(g, "L", 1, 2)
        assert not is_true_integral(g, "L", 1, 2)
        assert a.frequencies() != {F(0)}
        assert total_time_derivative(a, hamiltonian(g)).is_zero()

    def test_coupling_solving(self):
        assert true_integral_coupling("L", 1, 2) == F(1, 3)
        assert true_integral_coupling("L", 1, 1) == 0
        assert true_integral_coupling("J", 1, 2) == 3
        assert true_integral_coupling("J", 2, 2) is None

    def test_rejects_degenerate_orders(self):
        with pytest.raises(ValueError):
            hidden_integral(F(1, 3), "L", 0, 0)
        with pytest.raises(ValueError):
            hidden_integral(F(1, 3), "X", 1, 2)

    def test_bracket_of_hidden_pair_closes_on_numbers(self):
        # {L^-_{1,2}, L^+_{1,2}} at g=1/3 is a degree-2 polynomial in N1, N2
        g = F(1, 3)
        lp = hidden_integral(g, "L", 1, 2)
        lm = hidden_integral(g, "L", 1, 2, sign="-")
        br = poisson_bracket(lm, lp)
        cf = reduce_to_cartan(br)
        assert cf.is_pure
        assert cf.diagonal == {(0, 2): ExactComplex(0, -1),
                               (1, 1): ExactComplex(0, 4)}

    def test_hidden_bracket_numeric_cross_check(self):
        # same bracket evaluated as a complex function on a grid of points
        g = F(1, 3)
        lp = hidden_integral(g, "L", 1, 2)
        lm = hidden_integral(g, "L", 1, 2, sign="-")
        br = poisson_bracket(lm, lp)
        pts = [
            {"b1+": 0.3 + 0.1j, "b1-": 0.3 - 0.1j,
             "b2+": -0.2 + 0.5j, "b2-": -0.2 - 0.5j},
            {"b1+": 1.0 + 0j, "b1-": 1.0 + 0j,
             "b2+": 0.4 - 0.3j, "b2-": 0.4 + 0.3j},
        ]
        for pt in pts:
            n1 = (pt["b1+"] * pt["b1-"]).real
            n2 = (pt["b2+"] * pt["b2-"]).real
            want = -1j * n2 ** 2 + 4j * n1 * n2
            assert abs(br.evaluate(pt) - want) < 1e-12


class TestCouplingPhases:
    @pytest.mark.parametrize("g,phase", [
        (F(0), Phase.ISOTROPIC), (F(1, 3), Phase.EUCLIDEAN),
        (F(-2, 3), Phase.EUCLIDEAN), (F(1), Phase.LANDAU),
        (F(-1), Phase.LANDAU), (F(3), Phase.MINKOWSKIAN),
        (F(-5, 4), Phase.MINKOWSKIAN),
    ])
    def test_phase_tag(self, g, phase):
        assert Coupling(g).phase == phase

    def test_ell_sum_and_difference(self):
        c = Coupling(F(2, 7))
        assert c.ell1 + c.ell2 == 2
        assert c.ell1 - c.ell2 == 2 * c.g

    @pytest.mark.parametrize("g,orders", [
        (F(0), (1, 1)), (F(1, 3), (1, 2)), (F(1, 2), (1, 3)),
        (F(3, 5), (1, 4)), (F(1, 5), (2, 3)), (F(3), (1, 2)),
        (F(2), (1, 3)), (F(5, 3), (1, 4)), (F(-1, 3), (2, 1)),
    ])
    def test_mode_orders(self, g, orders):
        c = Coupling(g)
        assert c.mode_orders == orders
        s1, s2 = orders
        if c.phase in (Phase.ISOTROPIC, Phase.EUCLIDEAN):
            assert g == F(s2 - s1, s1 + s2)
        else:
            assert g == F(s1 + s2, s2 - s1)

    def test_no_orders_at_landau(self):
        assert Coupling(F(1)).mode_orders is None
        assert Coupling(F(-1)).s1 is None

    @pytest.mark.parametrize("g", [F(1, 3), F(2, 5), F(7, 2), F(-4, 3),
                                   F(9, 7), F(-1, 6)])
    def test_exactly_one_family_contains_true_integral(self, g):
        s1, s2 = Coupling(g).mode_orders
        l_hit = is_true_integral(g, "L", s1, s2)
        j_hit = is_true_integral(g, "J", s1, s2)
        assert l_hit != j_hit
        assert l_hit == (abs(g) < 1)
