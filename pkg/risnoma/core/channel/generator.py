"""
Channel realization generator and combined-gain evaluation.
"""
from typing import Union

import numpy as np

from ..errors import DimensionMismatchError
from ..logging import get_logger
from ..manifold.models import BeamVector
from .fading import path_loss, sample_rician
from .models import ChannelSet, Geometry, ScenarioConfig

logger = get_logger(__name__)

BeamLike = Union[BeamVector, np.ndarray]


def _as_vector(v: BeamLike) -> np.ndarray:
    return v.v if isinstance(v, BeamVector) else np.asarray(v, dtype=complex).reshape(-1)


def generate_channels(cfg: ScenarioConfig, rng: np.random.Generator) -> ChannelSet:
    """
    Draw one realization of every link.

    Draw order is fixed (BD positions, h, h~, f, g) so a seeded
    generator always yields the same ChannelSet.
    """
    geo = cfg.geometry
    k, q = cfg.k, cfg.q_ris
    positions = geo.sample_bd_positions(k, rng)

    d_ct_bd = Geometry.distance(positions, geo.ct)
    d_bd_br = Geometry.distance(positions, geo.br)
    d_bd_ris = Geometry.distance(positions, geo.ris)
    d_ris_br = float(Geometry.distance(geo.ris, geo.br))

    amp_ct_bd = np.sqrt(path_loss(d_ct_bd, cfg.alpha.ct_bd, cfg.rho))
    amp_bd_br = np.sqrt(path_loss(d_bd_br, cfg.alpha.bd_br, cfg.rho))
    amp_bd_ris = np.sqrt(path_loss(d_bd_ris, cfg.alpha.bd_ris, cfg.rho))
    amp_ris_br = np.sqrt(path_loss(d_ris_br, cfg.alpha.ris_br, cfg.rho))

    h = amp_ct_bd * sample_rician(cfg.kappa.ct_bd, k, rng)
    h_tilde = amp_bd_br * sample_rician(cfg.kappa.bd_br, k, rng)
    f = amp_bd_ris[:, None] * sample_rician(cfg.kappa.bd_ris, k * q, rng).reshape(k, q)
    g = amp_ris_br * sample_rician(cfg.kappa.ris_br, q, rng)

    logger.debug(f"Generated channels: K={k}, Q={q}, BD x={np.round(positions[:, 0], 2)}")
    return ChannelSet(h=h, h_tilde=h_tilde, f=f, g=g)


def _check_length(ch: ChannelSet, v: np.ndarray) -> None:
    if v.shape[0] != ch.q_ris + 1:
        raise DimensionMismatchError(ch.q_ris + 1, v.shape[0])


def combined_gains(ch: ChannelSet, v: BeamLike) -> np.ndarray:
    """All H_k = |b_k^H v|^2, shape (K,)."""
    vec = _as_vector(v)
    _check_length(ch, vec)
    return np.abs(ch.b.conj() @ vec) ** 2


def combined_gain(ch: ChannelSet, v: BeamLike, k: int) -> float:
    """H_k = |b_k^H v|^2 for one BD."""
    return float(combined_gains(ch, v)[k])


def combined_gains_theta(ch: ChannelSet, v: BeamLike) -> np.ndarray:
    """
    H_k = |(h~_k + g^H Theta f_k) h_k|^2 evaluated from the phase shifts.

    Independent of the stacked b_k path; used for audits.
    """
    vec = _as_vector(v)
    _check_length(ch, vec)
    theta = BeamVector(vec).theta
    reflected = (np.conj(ch.g) * np.exp(1j * theta))[None, :] * ch.f
    return np.abs((ch.h_tilde + reflected.sum(axis=1)) * ch.h) ** 2


def no_ris_gains(ch: ChannelSet) -> np.ndarray:
    """H_k = |h~_k h_k|^2 with the RIS path removed."""
    return np.abs(ch.h_tilde * ch.h) ** 2
