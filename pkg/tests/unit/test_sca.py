"""Tests for the SCA subproblem, the SCA loop and the feasibility search."""
import numpy as np
import pytest

from risnoma.core.config import PenaltyConfig, ScaConfig
from risnoma.core.errors import InfeasibleInstanceError
from risnoma.core.power import QosTargets
from risnoma.core.sca import (
    AuxiliaryVars,
    ScaSubproblem,
    f_sca,
    find_feasible_start,
    linearized_constraints,
    penalty_target,
    run_sca,
    solve_sca_subproblem,
)
from tests.helpers import random_complex, random_unit


class TestFsca:
    """Test suite for the tangent minorant."""

    def test_tangency(self):
        """Equal to |a|^2 at the reference point."""
        assert f_sca(1 + 0j, 1 + 0j) == pytest.approx(1.0)

    def test_zero_reference(self):
        """A zero reference gives the zero function."""
        assert f_sca(3 - 2j, 0j) == 0.0

    def test_minorant(self):
        """f_sca(2, 1) = 3 <= 4."""
        assert f_sca(2 + 0j, 1 + 0j) == pytest.approx(3.0)

    def test_minorant_random(self, rng):
        """The minorant never exceeds |a|^2."""
        for a, ref in zip(random_complex(rng, 200), random_complex(rng, 200)):
            assert f_sca(a, ref) <= abs(a) ** 2 + 1e-12


class TestAuxiliaryVars:
    """Test suite for AuxiliaryVars."""

    def test_real_stacking(self, rng):
        """[Re a, Im a] round-trips."""
        aux = AuxiliaryVars(random_complex(rng, 3))
        np.testing.assert_allclose(AuxiliaryVars.from_real(aux.to_real()).a, aux.a)

    def test_non_finite(self):
        """NaN entries are rejected."""
        with pytest.raises(ValueError):
            AuxiliaryVars(np.array([np.nan]))


class TestLinearizedConstraints:
    """Test suite for linearized_constraints."""

    def test_counts(self):
        """K QoS forms (positive targets) plus K(K-1)/2 ordering forms."""
        forms = linearized_constraints(np.ones(3, dtype=complex), np.ones(3), QosTargets(np.ones(3)), 0.1, 1e-9)
        assert len(forms) == 3 + 3

    def test_zero_target_skipped(self):
        """r_k = 0 drops the QoS form."""
        forms = linearized_constraints(np.ones(2, dtype=complex), np.ones(2), QosTargets(np.array([0.0, 1.0])), 0.1, 1e-9)
        assert len(forms) == 1 + 1

    def test_qos_form_value(self):
        """At a_ref the QoS form is r (w_2 |a_2|^2 + noise) - w_1 |a_1|^2."""
        a_ref = np.array([2.0 + 0j, 1.0 + 0j])
        forms = linearized_constraints(a_ref, np.array([1.0, 0.5]), QosTargets(np.array([1.0, 0.0])), 0.1, 0.0)
        z = AuxiliaryVars(a_ref).to_real()
        assert forms[0].value(z) == pytest.approx(1.0 * (0.5 * 1.0 + 0.1) - 4.0)


class TestSubproblem:
    """Test suite for the convex subproblem."""

    def test_single_bd_closed_form(self, rng):
        """K=1 without QoS: a = (w a_ref + mu b^H v) / mu."""
        b = random_complex(rng, 1, 4)
        v = random_unit(rng, 4)
        a_ref = AuxiliaryVars(random_complex(rng, 1))
        mu, w = 5.0, np.array([0.8])
        out = solve_sca_subproblem(a_ref, w, b, v, QosTargets(np.zeros(1)), 1.0, 1.0, PenaltyConfig(mu=mu))
        expected = (w[0] * a_ref.a[0] + mu * penalty_target(b, v)[0]) / mu
        assert out.a[0] == pytest.approx(expected, abs=1e-9)

    def test_large_penalty(self, rng):
        """As mu grows with constraints inactive, a approaches b^H v."""
        b = random_complex(rng, 2, 3)
        v = random_unit(rng, 3)
        b = b[np.argsort(-np.abs(penalty_target(b, v)))]
        target = penalty_target(b, v)
        out = solve_sca_subproblem(AuxiliaryVars(target), np.ones(2), b, v, QosTargets(np.zeros(2)), 1.0, 1.0,
                                   PenaltyConfig(mu=1e6, mu_max=1e8))
        np.testing.assert_allclose(out.a, target, atol=1e-5)

    def test_kkt_and_descent(self):
        """Constrained subproblems solve to a small KKT residual and never beat the reference."""
        rng = np.random.default_rng(12)
        for _ in range(10):
            a_ref = AuxiliaryVars(np.array([3.0 + 0.5j, 1.0 - 0.2j]))
            target = a_ref.a + 0.3 * random_complex(rng, 2)
            sub = ScaSubproblem(a_ref, np.array([1.0, 0.7]), target, QosTargets(np.array([0.5, 0.5])),
                                1.0, 0.1, PenaltyConfig(mu=2.0))
            solution = sub.solve()
            assert solution.kkt_residual <= 1e-6
            assert np.all(sub.constraint_values(solution.aux.a) <= 1e-9)
            assert solution.objective <= sub.objective_value(a_ref.a) + 1e-9

    def test_grid_oracle(self):
        """K=2 subproblem objective matches a coarse-to-fine grid search."""
        a_ref = AuxiliaryVars(np.array([2.0 + 0j, 1.0 + 0j]))
        target = np.array([1.6 + 0.3j, 1.1 - 0.2j])
        sub = ScaSubproblem(a_ref, np.array([1.0, 1.0]), target, QosTargets(np.array([0.3, 0.3])),
                            1.0, 0.1, PenaltyConfig(mu=3.0))
        solution = sub.solve()

        center, width = a_ref.to_real(), 2.0
        best = np.inf
        for _ in range(12):
            axes = [np.linspace(c - width, c + width, 9) for c in center]
            grid = np.stack(np.meshgrid(*axes, indexing='ij'), axis=-1).reshape(-1, 4)
            values = np.array([sub.problem.objective.value(z) for z in grid])
            mask = np.array([np.all(sub.problem.constraints.values(z) <= 0.0) for z in grid])
            values = np.where(mask, values, np.inf)
            idx = int(np.argmin(values))
            best = min(best, values[idx])
            center, width = grid[idx], width / 3.0
        assert solution.objective <= best + 1e-5
        assert solution.objective >= best - 1e-5


class TestRunSca:
    """Test suite for the SCA loop."""

    @pytest.fixture
    def instance(self):
        rng = np.random.default_rng(31)
        b = random_complex(rng, 3, 9)
        v = random_unit(rng, 9)
        target = penalty_target(b, v)
        order = np.argsort(-np.abs(target))
        return b[order], v

    def test_trace_non_increasing(self, instance):
        """The penalized objective never increases."""
        b, v = instance
        init = AuxiliaryVars(penalty_target(b, v))
        result = run_sca(init, np.array([1.0, 0.8, 0.6]), b, v, QosTargets(np.full(3, 0.05)), 1.0, 0.01,
                         PenaltyConfig(mu=2.0))
        assert np.all(np.diff(result.trace) <= 1e-12 * np.maximum(1.0, np.abs(result.trace[:-1])))
        assert result.iterations >= 1

    def test_stationary_start(self):
        """A fixed point terminates after one subproblem, unchanged."""
        b = np.array([[1.0 + 0j, 0.0]])
        v = np.array([1.0 + 0j, 1.0 + 0j])
        mu, w = 2.0, np.array([1.0])
        # Unconstrained fixed point: a = (w a + mu c) / mu  =>  a = mu c / (mu - w)
        a_star = mu * penalty_target(b, v) / (mu - w)
        result = run_sca(AuxiliaryVars(a_star), w, b, v, QosTargets(np.zeros(1)), 1.0, 1.0, PenaltyConfig(mu=mu))
        assert result.iterations == 1
        np.testing.assert_allclose(result.aux.a, a_star, atol=1e-9)

    def test_residual_shrinks_with_mu(self, instance):
        """The penalty residual decreases as mu escalates."""
        b, v = instance
        target = penalty_target(b, v)
        w = np.array([1.0, 0.8, 0.6])
        residuals = []
        pen = PenaltyConfig(mu=5.0, mu_max=1e8)
        for _ in range(4):
            result = run_sca(AuxiliaryVars(target), w, b, v, QosTargets(np.full(3, 0.05)), 1.0, 0.01, pen)
            residuals.append(result.aux.penalty_residual(target))
            pen = pen.with_mu(pen.mu * 10.0)
        assert all(later < earlier for earlier, later in zip(residuals, residuals[1:]))


class TestFeasibleStart:
    """Test suite for find_feasible_start."""

    def test_already_feasible(self):
        """A strictly feasible guess returns with zero slack at once."""
        guess = AuxiliaryVars(np.array([3.0 + 0j, 1.0 + 0j]))
        result = find_feasible_start(guess, np.ones(2), QosTargets(np.array([0.5, 0.5])), 1.0, 0.1)
        assert result.indicator == 0.0
        assert result.iterations == 1
        np.testing.assert_array_equal(result.aux.a, guess.a)

    def test_no_constraints(self):
        """K=1 without a target is vacuous."""
        guess = AuxiliaryVars(np.array([0.3 + 0j]))
        result = find_feasible_start(guess, np.ones(1), QosTargets(np.zeros(1)), 1.0, 0.1)
        assert result.indicator == 0.0

    def test_repairs_ordering(self):
        """A guess with |a_1| < |a_2| is moved to |a_1| > |a_2|."""
        guess = AuxiliaryVars(np.array([1.0 + 0j, 2.0 + 0j]))
        result = find_feasible_start(guess, np.ones(2), QosTargets(np.zeros(2)), 1.0, 0.1)
        assert result.indicator <= ScaConfig().eps_feas
        assert abs(result.aux.a[0]) > abs(result.aux.a[1])

    def test_repairs_qos(self):
        """A QoS-violating guess is moved onto the constraints."""
        guess = AuxiliaryVars(np.array([1.0 + 0j, 0.98 + 0j]))
        targets = QosTargets(np.array([1.0, 1.0]))
        result = find_feasible_start(guess, np.ones(2), targets, 1.0, 0.1)
        a = np.abs(result.aux.a) ** 2
        assert a[0] >= 1.0 * (a[1] + 0.1) - 1e-8
        assert a[1] >= 1.0 * 0.1 - 1e-8

    def test_stall_raises(self):
        """An iteration budget too small to finish raises."""
        guess = AuxiliaryVars(np.array([0.01 + 0j, 2.0 + 0j]))
        with pytest.raises(InfeasibleInstanceError):
            find_feasible_start(guess, np.ones(2), QosTargets(np.array([50.0, 50.0])), 1.0, 10.0,
                                ScaConfig(max_feas_iter=1))
