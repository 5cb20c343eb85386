"""Tests for SIC rates and the closed-form reflection coefficients."""
import itertools

import numpy as np
import pytest

from risnoma.core.errors import InfeasibleAllocationError, ScenarioValidationError
from risnoma.core.power import (
    QosTargets,
    ReflectionCoefficients,
    is_strictly_ordered,
    lower_bounds,
    optimal_w,
    qos_satisfied,
    rate_k,
    rates,
    sinr,
    sum_rate,
)


def targets(*r):
    return QosTargets(np.array(r, dtype=float))


class TestRates:
    """Test suite for per-BD and sum rates."""

    def test_first_rate(self):
        """K=2, w=[1,1], H=[2,1], unit power and noise gives R_1 = 1."""
        assert rate_k(np.ones(2), np.array([2.0, 1.0]), 1.0, 1.0, 0) == pytest.approx(1.0)

    def test_last_rate_interference_free(self):
        """The last decoded BD sees only noise."""
        w = np.array([0.7, 0.4])
        H = np.array([3.0, 2.0])
        expected = np.log2(1.0 + 0.4 * 5.0 * 2.0 / 0.5)
        assert rate_k(w, H, 5.0, 0.5, 1) == pytest.approx(expected)

    def test_zero_coefficient(self):
        """w_k = 0 gives zero rate."""
        assert rate_k(np.array([0.0, 1.0]), np.array([2.0, 1.0]), 1.0, 1.0, 0) == 0.0

    def test_telescoping_example(self):
        """Sum rate 2.0 equals R_1 + R_2 = 1.0 + 1.0."""
        w, H = np.ones(2), np.array([2.0, 1.0])
        np.testing.assert_allclose(rates(w, H, 1.0, 1.0), [1.0, 1.0])
        assert sum_rate(w, H, 1.0, 1.0) == pytest.approx(2.0)

    def test_all_zero(self):
        """All-zero coefficients give zero sum rate."""
        assert sum_rate(np.zeros(3), np.array([3.0, 2.0, 1.0]), 1.0, 1.0) == 0.0

    def test_telescoping_random(self):
        """Sum of per-BD rates equals the telescoped form on random instances."""
        rng = np.random.default_rng(0)
        for _ in range(1000):
            k = int(rng.integers(1, 7))
            w = rng.uniform(0.0, 1.0, k)
            H = np.sort(rng.exponential(1.0, k))[::-1]
            p_t, sigma2 = rng.uniform(0.1, 10.0), rng.uniform(0.01, 1.0)
            assert abs(np.sum(rates(w, H, p_t, sigma2)) - sum_rate(w, H, p_t, sigma2)) <= 1e-9

    def test_decoding_order_independence(self):
        """Permuting (w, H) jointly leaves the total rate unchanged."""
        rng = np.random.default_rng(3)
        for _ in range(50):
            k = int(rng.integers(2, 5))
            w = rng.uniform(0.0, 1.0, k)
            H = rng.exponential(1.0, k)
            reference = sum_rate(w, H, 2.0, 0.5)
            for perm in itertools.permutations(range(k)):
                p = list(perm)
                assert sum_rate(w[p], H[p], 2.0, 0.5) == pytest.approx(reference, abs=1e-12)
                assert float(np.sum(rates(w[p], H[p], 2.0, 0.5))) == pytest.approx(reference, abs=1e-9)

    def test_rates_match_rate_k(self):
        """The vectorized rates agree with rate_k."""
        w = ReflectionCoefficients(np.array([1.0, 0.5, 0.2]))
        H = np.array([4.0, 2.0, 1.0])
        expected = [rate_k(w, H, 2.0, 0.3, k) for k in range(3)]
        np.testing.assert_allclose(rates(w, H, 2.0, 0.3), expected)

    def test_sinr(self):
        """SINR is 2^R - 1."""
        np.testing.assert_allclose(sinr(np.ones(2), np.array([2.0, 1.0]), 1.0, 1.0), [1.0, 1.0])


class TestModels:
    """Test suite for power allocation value types."""

    def test_box_validation(self):
        """Coefficients outside [0, 1] are rejected."""
        with pytest.raises(ScenarioValidationError):
            ReflectionCoefficients(np.array([1.5]))

    def test_rounding_is_clipped(self):
        """Values within the slack are clipped into the box."""
        w = ReflectionCoefficients(np.array([1.0 + 1e-13, -1e-13]))
        assert w.to_list() == [1.0, 0.0]

    def test_targets_from_rates(self):
        """1 bit/s/Hz is SINR threshold 1; scalars broadcast."""
        t = QosTargets.from_rates(1.0, k=3)
        np.testing.assert_allclose(t.r_min, [1.0, 1.0, 1.0])
        np.testing.assert_allclose(t.rates, [1.0, 1.0, 1.0])


class TestLowerBounds:
    """Test suite for lower_bounds."""

    def test_single_bd(self):
        """K=1, r=1, sigma2=0.1, P_T=1, H=[1] gives [0.1]."""
        np.testing.assert_allclose(lower_bounds(np.array([1.0]), targets(1.0), 1.0, 0.1), [0.1])

    def test_two_bds(self):
        """K=2, r=[1,1], sigma2=0.1, H=[1,1] gives [0.2, 0.1]."""
        np.testing.assert_allclose(lower_bounds(np.ones(2), targets(1.0, 1.0), 1.0, 0.1), [0.2, 0.1])

    def test_no_targets(self):
        """Zero thresholds give zero lower bounds."""
        np.testing.assert_allclose(lower_bounds(np.array([2.0, 1.0]), targets(0.0, 0.0), 1.0, 0.1), [0.0, 0.0])

    def test_zero_gain_with_target(self):
        """A dead channel with a positive target is infeasible."""
        with pytest.raises(InfeasibleAllocationError):
            lower_bounds(np.array([1.0, 0.0]), targets(1.0, 1.0), 1.0, 0.1)

    def test_lower_bounds_meet_qos(self):
        """Everyone at the lower bound meets every target with equality."""
        H = np.array([3.0, 2.0, 1.0])
        t = targets(1.0, 0.5, 2.0)
        lb = lower_bounds(H, t, 1.0, 0.1)
        np.testing.assert_allclose(sinr(lb, H, 1.0, 0.1), t.r_min)


class TestOrdering:
    """Test suite for is_strictly_ordered."""

    def test_decreasing(self):
        """Strictly decreasing gains pass."""
        assert is_strictly_ordered(np.array([3.0, 2.0, 1.0]))

    def test_tie(self):
        """Ties fail."""
        assert not is_strictly_ordered(np.array([2.0, 2.0]))

    def test_single(self):
        """A single BD is trivially ordered."""
        assert is_strictly_ordered(np.array([1.0]))


class TestOptimalW:
    """Test suite for optimal_w."""

    def test_single_bd(self):
        """K=1 reflects fully."""
        alloc = optimal_w(np.array([1.0]), targets(1.0), 1.0, 0.1)
        assert alloc.feasible
        assert alloc.w.to_list() == [1.0]

    def test_both_full(self):
        """H=[2,1], sigma2=0.1, r=[1,1]: upper bound 1.9 so w* = [1, 1]."""
        alloc = optimal_w(np.array([2.0, 1.0]), targets(1.0, 1.0), 1.0, 0.1)
        assert alloc.feasible
        np.testing.assert_allclose(alloc.w.w, [1.0, 1.0])
        assert alloc.breakpoint is None

    def test_second_bd_capped(self):
        """H=[1.5,1], sigma2=0.1, r=[3,1]: w_2 = 1.5/3 - 0.1 = 0.4."""
        alloc = optimal_w(np.array([1.5, 1.0]), targets(3.0, 1.0), 1.0, 0.1)
        assert alloc.feasible
        np.testing.assert_allclose(alloc.w.w, [1.0, 0.4])
        assert alloc.breakpoint == 1

    def test_tail_at_lower_bound(self):
        """After the breakpoint every coefficient sits at its lower bound."""
        H = np.array([2.0, 1.9, 0.5])
        alloc = optimal_w(H, targets(1.0, 1.0, 1.0), 1.0, 0.1)
        assert alloc.feasible
        assert alloc.w.w[0] == 1.0
        assert alloc.breakpoint == 1
        assert alloc.w.w[2] == pytest.approx(alloc.lower_bounds[2])
        assert qos_satisfied(alloc.w.w, H, targets(1.0, 1.0, 1.0), 1.0, 0.1)

    def test_unordered_gains(self):
        """Gains not strictly decreasing are reported infeasible."""
        alloc = optimal_w(np.array([1.0, 2.0]), targets(0.1, 0.1), 1.0, 0.1)
        assert not alloc.feasible
        assert "decreasing" in alloc.reason

    def test_lower_bound_above_one(self):
        """An unreachable target is reported with its lower bounds."""
        alloc = optimal_w(np.array([2.0, 1.0]), targets(1e3, 1e3), 1.0, 0.1)
        assert not alloc.feasible
        assert alloc.lower_bounds is not None

    def test_no_targets(self):
        """Without QoS every BD reflects fully."""
        alloc = optimal_w(np.array([3.0, 2.0, 1.0]), targets(0.0, 0.0, 0.0), 1.0, 0.1)
        np.testing.assert_allclose(alloc.w.w, np.ones(3))

    def test_random_instances_feasible(self):
        """Every feasible allocation meets QoS and the box."""
        rng = np.random.default_rng(3)
        for _ in range(500):
            k = int(rng.integers(1, 6))
            H = np.sort(rng.uniform(0.1, 10.0, k))[::-1]
            t = QosTargets(rng.uniform(0.0, 1.0, k))
            alloc = optimal_w(H, t, 1.0, 0.05)
            if alloc.feasible:
                assert np.all((alloc.w.w >= 0.0) & (alloc.w.w <= 1.0))
                assert qos_satisfied(alloc.w.w, H, t, 1.0, 0.05)
