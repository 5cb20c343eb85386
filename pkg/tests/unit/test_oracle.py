"""Tests comparing the closed-form allocation with the grid oracle."""
import numpy as np
import pytest

from risnoma.core.errors import OracleRefusedError
from risnoma.core.power import (
    QosTargets,
    brute_force_w,
    objective,
    optimal_w,
    qos_satisfied,
)


class TestBruteForce:
    """Test suite for brute_force_w."""

    def test_unconstrained(self):
        """Without targets the oracle returns full reflection."""
        w = brute_force_w(np.array([3.0, 2.0, 1.0]), QosTargets(np.zeros(3)), 1.0, 0.1)
        np.testing.assert_allclose(w.w, np.ones(3))

    def test_capped_example(self):
        """H=[1.5,1], sigma2=0.1, r=[3,1]: the oracle confirms w_2 = 0.4."""
        w = brute_force_w(np.array([1.5, 1.0]), QosTargets(np.array([3.0, 1.0])), 1.0, 0.1)
        assert w.w[0] == pytest.approx(1.0)
        assert w.w[1] == pytest.approx(0.4, abs=1e-3)

    def test_infeasible(self):
        """Huge targets leave no grid point, and optimal_w agrees."""
        H = np.array([2.0, 1.0])
        t = QosTargets(np.array([1e4, 1e4]))
        assert brute_force_w(H, t, 1.0, 0.1) is None
        assert not optimal_w(H, t, 1.0, 0.1).feasible

    def test_refuses_large_k(self):
        """K above the oracle limit is refused."""
        with pytest.raises(OracleRefusedError):
            brute_force_w(np.ones(4), QosTargets(np.zeros(4)), 1.0, 0.1)

    def test_bad_grid_step(self):
        """The grid step must lie in (0, 1]."""
        with pytest.raises(ValueError):
            brute_force_w(np.ones(2), QosTargets(np.zeros(2)), 1.0, 0.1, grid_step=0.0)


class TestClosedFormAgainstOracle:
    """Randomized agreement between optimal_w and the grid search."""

    @pytest.mark.parametrize("k", [
        2,
        pytest.param(3, marks=pytest.mark.slow),
    ])
    def test_closed_form_is_optimal(self, k):
        """On 500 instances at grid step 1e-3 no grid point beats optimal_w beyond grid tolerance."""
        rng = np.random.default_rng(100 + k)
        step = 1e-3
        checked = 0
        for _ in range(500):
            H = np.sort(rng.uniform(0.2, 5.0, k))[::-1]
            t = QosTargets(rng.uniform(0.0, 1.5, k))
            sigma2 = rng.uniform(0.01, 0.2)
            alloc = optimal_w(H, t, 1.0, sigma2)
            oracle = brute_force_w(H, t, 1.0, sigma2, grid_step=step)
            if not alloc.feasible:
                assert oracle is None
                continue
            checked += 1
            assert qos_satisfied(alloc.w.w, H, t, 1.0, sigma2)
            if oracle is not None:
                assert objective(oracle.w, H) <= objective(alloc.w.w, H) + k * step * H.max()
        assert checked > 0
