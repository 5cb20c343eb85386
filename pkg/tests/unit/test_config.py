"""Tests for solver configuration and exit codes."""
import pytest

from risnoma.core.config import (
    AOConfig,
    BarrierConfig,
    PenaltyConfig,
    SolverConfig,
)
from risnoma.core.errors import ConfigError, ExitCodes, OrderEnumerationCapError


class TestPenaltyConfig:
    """Test suite for PenaltyConfig."""

    def test_escalate(self):
        pen = PenaltyConfig(mu=2.0, mu_growth=5.0, mu_max=20.0)
        assert pen.escalate().mu == 10.0
        assert pen.escalate().escalate().mu == 20.0
        assert pen.escalate().escalate().at_cap

    @pytest.mark.parametrize("kwargs", [
        {'mu': 0.0},
        {'mu_growth': 0.5},
        {'eps_pen': 0.0},
        {'mu': 10.0, 'mu_max': 1.0},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            PenaltyConfig(**kwargs)


class TestBarrierConfig:
    """Test suite for BarrierConfig."""

    def test_line_search_range(self):
        with pytest.raises(ValueError):
            BarrierConfig(alpha=0.6)

    def test_growth(self):
        with pytest.raises(ValueError):
            BarrierConfig(t_growth=1.0)


class TestSolverConfig:
    """Test suite for SolverConfig."""

    def test_defaults(self):
        cfg = SolverConfig.default()
        assert cfg.ao.order_enum_cap == 5
        assert cfg.ao.random_ris_draws == 1

    def test_from_dict(self):
        cfg = SolverConfig.from_dict({'ao': {'max_iter': 7}, 'manifold': {'tol': 1e-6}})
        assert cfg.ao.max_iter == 7
        assert cfg.ao.eps_ao == AOConfig().eps_ao
        assert cfg.manifold.tol == 1e-6

    def test_unknown_section(self):
        with pytest.raises(TypeError):
            SolverConfig.from_dict({'newton': {}})

    def test_unknown_key(self):
        with pytest.raises(TypeError):
            SolverConfig.from_dict({'sca': {'tolerance': 1e-3}})


class TestErrors:
    """Test suite for error types and exit codes."""

    def test_exit_codes(self):
        assert ExitCodes.OK == 0
        assert ExitCodes.CONFIG_ERROR == 2
        assert ExitCodes.ALL_INFEASIBLE == 3
        assert 'ECONFIG' in ExitCodes.get_message(2)
        assert 'Unknown' in ExitCodes.get_message(99)

    def test_config_error_location(self):
        err = ConfigError("bad value", line=4, column=7)
        assert str(err) == "bad value (line 4, column 7)"
        assert str(ConfigError("bad value")) == "bad value"

    def test_cap_error_message(self):
        assert 'heuristic' in str(OrderEnumerationCapError(7, 5))
