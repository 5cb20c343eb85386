"""Tests for the comparison schemes."""
import numpy as np
import pytest

from risnoma.core.baselines import (
    BaselineKind,
    NomaNoRisStrategy,
    OmaNoRisStrategy,
    RandomRisStrategy,
    get_strategy,
    nomabc_no_ris,
    omabc_no_ris,
    random_ris,
)
from risnoma.core.channel import ChannelSet, ScenarioConfig
from risnoma.core.config import AOConfig
from risnoma.core.optimization import SolveStatus, rate_report


@pytest.fixture
def unit_scenario():
    """P_T / sigma2 = 3 without rate targets."""
    return ScenarioConfig(k=2, q_ris=1, p_t=3.0, sigma2=1.0, r_min=0.0)


class TestOma:
    """Test suite for orthogonal access without RIS."""

    def test_equal_share(self, unit_channels, unit_scenario):
        """H=1, P/sigma2=3, K=2: each BD gets log2(4)/2 = 1."""
        result = omabc_no_ris(unit_channels, unit_scenario)
        np.testing.assert_allclose(result.per_bd_rates, [1.0, 1.0])
        assert result.sum_rate_bits == pytest.approx(2.0)
        assert result.order is None
        assert result.v is None

    def test_infeasible_status(self, unit_channels, unit_scenario):
        """A target above the slot rate is reported through the status."""
        result = omabc_no_ris(unit_channels, unit_scenario.with_updates(r_min=1.5))
        assert result.status == SolveStatus.INFEASIBLE
        assert not result.feasible

    def test_audit(self, unit_channels, unit_scenario):
        """The audit recomputes the equal-share rates."""
        result = omabc_no_ris(unit_channels, unit_scenario)
        report = rate_report(result, unit_channels, unit_scenario)
        assert report.ok
        assert report.sum_rate_bits == pytest.approx(2.0)


class TestNomaNoRis:
    """Test suite for NOMA without RIS."""

    def test_single_bd(self):
        """K=1: log2(1 + P |h~ h|^2 / sigma2)."""
        ch = ChannelSet(h=np.array([2.0]), h_tilde=np.array([0.5]), f=np.ones((1, 1)), g=np.zeros(1))
        cfg = ScenarioConfig(k=1, q_ris=1, p_t=3.0, sigma2=1.0, r_min=0.0)
        result = nomabc_no_ris(ch, cfg)
        assert result.sum_rate_bits == pytest.approx(2.0)
        assert result.w.to_list() == [1.0]

    def test_equal_gains_infeasible(self, unit_channels, unit_scenario):
        """Tied gains admit no strict decoding order."""
        result = nomabc_no_ris(unit_channels, unit_scenario)
        assert not result.feasible
        assert np.isnan(result.sum_rate_bits)

    def test_feasible_result_audits(self, small_scenario, small_channels):
        """Closed-form w under the best order passes the audit."""
        result = nomabc_no_ris(small_channels, small_scenario)
        assert result.feasible
        assert result.orders_evaluated == 2
        assert rate_report(result, small_channels, small_scenario).ok

    def test_beats_orthogonal_without_targets(self, small_scenario, small_channels):
        """Without QoS, SIC with full reflection beats equal time shares."""
        cfg = small_scenario.with_updates(r_min=0.0)
        assert nomabc_no_ris(small_channels, cfg).sum_rate_bits > omabc_no_ris(small_channels, cfg).sum_rate_bits


class TestRandomRis:
    """Test suite for the random-phase baseline."""

    def test_no_ris_path(self, small_scenario, small_channels):
        """With g = 0 the phases do not matter and the result matches NOMA without RIS."""
        ch = small_channels.without_ris()
        rand = random_ris(ch, small_scenario, np.random.default_rng(0))
        noma = nomabc_no_ris(ch, small_scenario)
        assert rand.sum_rate_bits == pytest.approx(noma.sum_rate_bits, rel=1e-12)

    def test_deterministic(self, small_scenario, small_channels):
        """Same stream, same result."""
        first = random_ris(small_channels, small_scenario, np.random.default_rng(9))
        second = random_ris(small_channels, small_scenario, np.random.default_rng(9))
        assert first.sum_rate_bits == second.sum_rate_bits

    def test_more_draws_never_worse(self, small_scenario, small_channels):
        """The best of several draws includes the first one."""
        one = random_ris(small_channels, small_scenario, np.random.default_rng(9), n_draws=1)
        many = random_ris(small_channels, small_scenario, np.random.default_rng(9), n_draws=8)
        if one.feasible:
            assert many.sum_rate_bits >= one.sum_rate_bits
        assert len(many.traces.objective) == 8

    def test_bad_draw_count(self):
        with pytest.raises(ValueError):
            RandomRisStrategy(n_draws=0)

    def test_audit(self, small_scenario, small_channels):
        """Random-phase results carry their beam and pass the audit."""
        result = random_ris(small_channels, small_scenario, np.random.default_rng(3))
        if result.feasible:
            assert result.v is not None
            assert rate_report(result, small_channels, small_scenario).ok


class TestGetStrategy:
    """Test suite for get_strategy."""

    @pytest.mark.parametrize("kind, cls", [
        (BaselineKind.RANDOM_RIS, RandomRisStrategy),
        (BaselineKind.NOMABC_NO_RIS, NomaNoRisStrategy),
        (BaselineKind.OMABC_NO_RIS, OmaNoRisStrategy),
    ])
    def test_registry(self, kind, cls):
        strategy = get_strategy(kind)
        assert isinstance(strategy, cls)
        assert strategy.kind == kind

    def test_string_kind(self):
        """Plain strings are accepted."""
        assert get_strategy('omabc_no_ris').kind == BaselineKind.OMABC_NO_RIS

    def test_scheme_label(self, unit_channels, unit_scenario):
        """Results are labeled with the scheme name."""
        strategy = get_strategy(BaselineKind.OMABC_NO_RIS, AOConfig())
        assert strategy.run(unit_channels, unit_scenario, np.random.default_rng(0)).scheme == 'omabc_no_ris'
