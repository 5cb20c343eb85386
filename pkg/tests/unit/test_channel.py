"""Tests for path loss, fading and channel generation."""
import math

import numpy as np
import pytest

from risnoma.core.channel import (
    ChannelSet,
    Geometry,
    ScenarioConfig,
    combined_gain,
    combined_gains,
    combined_gains_theta,
    db_to_linear,
    dbm_to_mw,
    generate_channels,
    mw_to_dbm,
    no_ris_gains,
    path_loss,
    sample_rician,
)
from risnoma.core.errors import ChannelDomainError, DimensionMismatchError, ScenarioValidationError
from risnoma.core.manifold import BeamVector
from tests.helpers import random_complex, random_unit


class TestPathLoss:
    """Test suite for path_loss."""

    def test_reference_distance(self):
        """At 1 m the loss equals rho."""
        assert path_loss(1.0, 2.5, 1e-3) == pytest.approx(1e-3)

    def test_zero_exponent(self):
        """Exponent zero gives rho at any distance."""
        assert path_loss(1.0, 0.0, 1.0) == pytest.approx(1.0)

    def test_direct_substitution(self):
        """100 m with exponent 2 gives 1e-4."""
        assert path_loss(100.0, 2.0, 1.0) == pytest.approx(1e-4)

    def test_vectorized(self):
        """Arrays are evaluated elementwise."""
        loss = path_loss(np.array([1.0, 10.0]), 2.0, 1.0)
        np.testing.assert_allclose(loss, [1.0, 0.01])

    @pytest.mark.parametrize("d", [0.0, -3.0])
    def test_non_positive_distance(self, d):
        """Non-positive distance is a domain error."""
        with pytest.raises(ChannelDomainError):
            path_loss(d, 2.0, 1.0)


class TestSampleRician:
    """Test suite for sample_rician."""

    def test_kappa_zero_is_pure_nlos(self):
        """With kappa = 0 the output is the complex Gaussian draw itself."""
        out = sample_rician(0.0, 8, np.random.default_rng(3))
        rng = np.random.default_rng(3)
        expected = (rng.standard_normal(8) + 1j * rng.standard_normal(8)) / np.sqrt(2.0)
        np.testing.assert_allclose(out, expected)

    def test_infinite_kappa_is_unit_modulus(self):
        """kappa -> inf collapses onto the LoS component."""
        out = sample_rician(math.inf, 16, np.random.default_rng(0))
        np.testing.assert_allclose(np.abs(out), 1.0)

    def test_unit_average_power(self):
        """Average power is 1 for kappa = 3."""
        out = sample_rician(3.0, 100_000, np.random.default_rng(11))
        assert 0.99 <= np.mean(np.abs(out) ** 2) <= 1.01

    def test_stream_position_independent_of_kappa(self):
        """Every kappa consumes the same number of draws."""
        rng_a = np.random.default_rng(5)
        rng_b = np.random.default_rng(5)
        sample_rician(0.0, 4, rng_a)
        sample_rician(math.inf, 4, rng_b)
        assert rng_a.standard_normal() == rng_b.standard_normal()

    def test_negative_kappa(self):
        """Negative kappa is a domain error."""
        with pytest.raises(ChannelDomainError):
            sample_rician(-1.0, 4, np.random.default_rng(0))


class TestUnits:
    """Test suite for dB conversions."""

    def test_noise_power(self):
        """-114 dBm is 10^-11.4 mW."""
        assert dbm_to_mw(-114.0) == pytest.approx(10 ** -11.4)

    def test_round_trip(self):
        """dBm -> mW -> dBm is the identity."""
        assert mw_to_dbm(dbm_to_mw(35.0)) == pytest.approx(35.0)

    def test_reference_loss(self):
        """-30 dB is 1e-3."""
        assert db_to_linear(-30.0) == pytest.approx(1e-3)


class TestScenarioConfig:
    """Test suite for ScenarioConfig validation."""

    def test_scalar_rate_broadcast(self):
        """A scalar r_min is broadcast to K entries."""
        cfg = ScenarioConfig(k=4, r_min=0.5)
        assert cfg.r_min == (0.5, 0.5, 0.5, 0.5)

    def test_changing_k_rebroadcasts(self):
        """with_updates(k=...) keeps a uniform rate target."""
        cfg = ScenarioConfig(k=3, r_min=1.0).with_updates(k=2)
        assert cfg.r_min == (1.0, 1.0)

    @pytest.mark.parametrize("changes", [
        {'k': 0},
        {'q_ris': 0},
        {'p_t': 0.0},
        {'r_min': -1.0},
        {'k': 2, 'r_min': (1.0, 1.0, 1.0)},
    ])
    def test_invalid(self, changes):
        """Invalid fields raise ScenarioValidationError."""
        with pytest.raises(ScenarioValidationError):
            ScenarioConfig(**changes)

    def test_bad_geometry_range(self):
        """A reversed BD range is rejected."""
        with pytest.raises(ScenarioValidationError):
            Geometry(bd_x_range=(50.0, 40.0))


class TestGenerateChannels:
    """Test suite for generate_channels."""

    def test_deterministic(self, small_scenario):
        """The same seed gives the same realization."""
        a = generate_channels(small_scenario, np.random.default_rng(9))
        b = generate_channels(small_scenario, np.random.default_rng(9))
        np.testing.assert_array_equal(a.b, b.b)

    def test_shapes(self, reference_scenario):
        """b has K rows of length Q + 1."""
        ch = generate_channels(reference_scenario, np.random.default_rng(0))
        assert ch.h.shape == (3,)
        assert ch.f.shape == (3, 50)
        assert ch.g.shape == (50,)
        assert ch.b.shape == (3, 51)

    def test_minimal_dimensions(self):
        """K = 1, Q = 1 gives b_1 of length 2."""
        ch = generate_channels(ScenarioConfig(k=1, q_ris=1), np.random.default_rng(0))
        assert ch.b.shape == (1, 2)

    def test_large_scale_fading(self):
        """The mean RIS-BR power matches the path loss at 5 m."""
        cfg = ScenarioConfig(k=1, q_ris=20_000)
        ch = generate_channels(cfg, np.random.default_rng(1))
        expected = path_loss(5.0, cfg.alpha.ris_br, cfg.rho)
        assert np.mean(np.abs(ch.g) ** 2) == pytest.approx(expected, rel=0.05)

    def test_arrays_are_read_only(self, small_channels):
        """Channel arrays cannot be mutated in place."""
        with pytest.raises(ValueError):
            small_channels.h[0] = 0.0


class TestCombinedGain:
    """Test suite for combined gains."""

    def test_no_ris_path(self, rng):
        """With g = 0 the gain is |h~ h|^2 for every beam."""
        ch = ChannelSet(h=random_complex(rng, 3), h_tilde=random_complex(rng, 3),
                        f=random_complex(rng, 3, 4), g=np.zeros(4))
        for _ in range(3):
            v = BeamVector(random_unit(rng, 5))
            np.testing.assert_allclose(combined_gains(ch, v), no_ris_gains(ch))

    def test_zero_carrier_link(self, rng):
        """h_k = 0 gives H_k = 0."""
        h = random_complex(rng, 2)
        h[1] = 0.0
        ch = ChannelSet(h=h, h_tilde=random_complex(rng, 2), f=random_complex(rng, 2, 3), g=random_complex(rng, 3))
        assert combined_gain(ch, BeamVector(random_unit(rng, 4)), 1) == 0.0

    def test_theta_form_matches_stacked_form(self, rng):
        """The phase-matrix form equals |b_k^H v|^2."""
        ch = ChannelSet(h=random_complex(rng, 3), h_tilde=random_complex(rng, 3),
                        f=random_complex(rng, 3, 4), g=random_complex(rng, 4))
        for _ in range(10):
            v = BeamVector(random_unit(rng, 5))
            np.testing.assert_allclose(combined_gains_theta(ch, v), combined_gains(ch, v), rtol=1e-10, atol=1e-12)

    def test_dimension_mismatch(self, small_channels):
        """A beam of the wrong length is rejected."""
        with pytest.raises(DimensionMismatchError):
            combined_gains(small_channels, np.ones(3))

    def test_permuted(self, rng):
        """permuted reorders rows of b."""
        ch = ChannelSet(h=random_complex(rng, 3), h_tilde=random_complex(rng, 3),
                        f=random_complex(rng, 3, 2), g=random_complex(rng, 2))
        np.testing.assert_allclose(ch.permuted([2, 0, 1]).b, ch.b[[2, 0, 1]])
