"""Pytest fixtures for risnoma tests."""
import numpy as np
import pytest

from risnoma.core.channel import ChannelSet, generate_channels
from risnoma.core.experiments import default_scenario


@pytest.fixture
def rng():
    """Seeded generator for reproducible draws."""
    return np.random.default_rng(1234)


@pytest.fixture
def reference_scenario():
    """Reference scenario (K=3, Q=50, 35 dBm)."""
    return default_scenario()


@pytest.fixture
def small_scenario():
    """K=2, Q=4 scenario with a modest rate target, 40 dBm."""
    return default_scenario().with_updates(k=2, q_ris=4, r_min=0.2).with_p_t_dbm(40.0)


@pytest.fixture
def small_channels(small_scenario):
    """One realization of the small scenario."""
    return generate_channels(small_scenario, np.random.default_rng(7))


@pytest.fixture
def three_bd_scenario():
    """K=3, Q=8 scenario with a modest rate target, 40 dBm."""
    return default_scenario().with_updates(k=3, q_ris=8, r_min=0.2).with_p_t_dbm(40.0)


@pytest.fixture
def unit_channels():
    """K=2, Q=1 channels with h = h~ = 1 and no RIS path."""
    return ChannelSet(
        h=np.ones(2),
        h_tilde=np.ones(2),
        f=np.ones((2, 1)),
        g=np.zeros(1),
    )
