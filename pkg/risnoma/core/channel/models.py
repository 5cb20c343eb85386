"""
Data models for channel module.

Uses frozen dataclasses so scenarios and channel realizations can be
shared across Monte-Carlo workers.
"""
from dataclasses import dataclass, field, replace
from typing import Sequence, Tuple, Union

import numpy as np

from ..errors import ScenarioValidationError

Point = Tuple[float, float]


def dbm_to_mw(dbm: float) -> float:
    """Convert dBm to linear mW."""
    return float(10.0 ** (dbm / 10.0))


def mw_to_dbm(mw: float) -> float:
    """Convert linear mW to dBm."""
    if mw <= 0:
        raise ScenarioValidationError(f"power must be positive, got {mw}")
    return float(10.0 * np.log10(mw))


def db_to_linear(db: float) -> float:
    """Convert a dB gain to linear scale."""
    return float(10.0 ** (db / 10.0))


@dataclass(frozen=True)
class LinkClassValues:
    """
    One value per link class.

    Attributes:
        ct_bd: carrier transmitter -> backscatter device
        bd_br: backscatter device -> backscatter receiver
        bd_ris: backscatter device -> RIS
        ris_br: RIS -> backscatter receiver
    """
    ct_bd: float
    bd_br: float
    bd_ris: float
    ris_br: float

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return (self.ct_bd, self.bd_br, self.bd_ris, self.ris_br)


@dataclass(frozen=True)
class Geometry:
    """
    2-D node coordinates in meters.

    BDs are drawn uniformly in the rectangle
    ``bd_x_range`` x ``bd_y_range``.
    """
    ct: Point = (0.0, 10.0)
    ris: Point = (65.0, 10.0)
    br: Point = (70.0, 10.0)
    bd_x_range: Tuple[float, float] = (40.0, 50.0)
    bd_y_range: Tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        for name in ('bd_x_range', 'bd_y_range'):
            low, high = getattr(self, name)
            if low > high:
                raise ScenarioValidationError(f"{name} has low > high: {low} > {high}")

    def sample_bd_positions(self, k: int, rng: np.random.Generator) -> np.ndarray:
        """Draw K BD positions, shape (K, 2)."""
        x = rng.uniform(self.bd_x_range[0], self.bd_x_range[1], size=k)
        y = rng.uniform(self.bd_y_range[0], self.bd_y_range[1], size=k)
        return np.column_stack([x, y])

    @staticmethod
    def distance(a: Union[Point, np.ndarray], b: Union[Point, np.ndarray]) -> np.ndarray:
        """Euclidean distance; broadcasts over leading dimensions."""
        return np.linalg.norm(np.asarray(a, dtype=float) - np.asarray(b, dtype=float), axis=-1)


@dataclass(frozen=True)
class ScenarioConfig:
    """
    One experiment point.

    Attributes:
        k: number of BDs
        q_ris: number of RIS elements
        p_t: transmit power, linear mW
        sigma2: noise power, linear mW
        r_min: per-BD minimum rate in bits/s/Hz (scalar broadcast to K)
        geometry: node coordinates
        alpha: path-loss exponent per link class
        rho: reference path loss at 1 m, linear
        kappa: Rician factor per link class
        seed: RNG seed
    """
    k: int = 3
    q_ris: int = 50
    p_t: float = field(default_factory=lambda: dbm_to_mw(35.0))
    sigma2: float = field(default_factory=lambda: dbm_to_mw(-114.0))
    r_min: Union[float, Tuple[float, ...]] = 1.0
    geometry: Geometry = field(default_factory=Geometry)
    alpha: LinkClassValues = field(
        default_factory=lambda: LinkClassValues(ct_bd=2.5, bd_br=2.5, bd_ris=2.1, ris_br=2.1)
    )
    rho: float = field(default_factory=lambda: db_to_linear(-30.0))
    kappa: LinkClassValues = field(
        default_factory=lambda: LinkClassValues(ct_bd=0.0, bd_br=0.0, bd_ris=3.0, ris_br=3.0)
    )
    seed: int = 0

    def __post_init__(self):
        if isinstance(self.r_min, (int, float)):
            object.__setattr__(self, 'r_min', (float(self.r_min),) * int(self.k))
        else:
            object.__setattr__(self, 'r_min', tuple(float(r) for r in self.r_min))
        self.validate()

    def validate(self) -> None:
        """Check the scenario invariants."""
        if self.k < 1:
            raise ScenarioValidationError(f"K must be >= 1, got {self.k}")
        if self.q_ris < 1:
            raise ScenarioValidationError(f"Q_ris must be >= 1, got {self.q_ris}")
        if self.p_t <= 0:
            raise ScenarioValidationError(f"P_T must be positive, got {self.p_t}")
        if self.sigma2 <= 0:
            raise ScenarioValidationError(f"sigma2 must be positive, got {self.sigma2}")
        if len(self.r_min) != self.k:
            raise ScenarioValidationError(
                f"r_min has {len(self.r_min)} entries for K={self.k}"
            )
        if any(r < 0 for r in self.r_min):
            raise ScenarioValidationError(f"r_min must be non-negative, got {self.r_min}")
        if self.rho <= 0:
            raise ScenarioValidationError(f"rho must be positive, got {self.rho}")
        if any(kappa < 0 for kappa in self.kappa.as_tuple()):
            raise ScenarioValidationError(f"kappa must be non-negative, got {self.kappa}")

    @property
    def p_t_dbm(self) -> float:
        return mw_to_dbm(self.p_t)

    @property
    def noise_to_power(self) -> float:
        """sigma^2 / P_T."""
        return self.sigma2 / self.p_t

    @property
    def r_min_array(self) -> np.ndarray:
        return np.asarray(self.r_min, dtype=float)

    def with_updates(self, **changes) -> 'ScenarioConfig':
        """Copy with fields replaced; a scalar ``r_min`` is re-broadcast."""
        if 'k' in changes and 'r_min' not in changes:
            rates = set(self.r_min)
            if len(rates) == 1:
                changes['r_min'] = rates.pop()
        return replace(self, **changes)

    def with_p_t_dbm(self, p_t_dbm: float) -> 'ScenarioConfig':
        return self.with_updates(p_t=dbm_to_mw(p_t_dbm))


def _freeze(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=complex)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class ChannelSet:
    """
    One channel realization.

    Attributes:
        h: (K,) CT -> BD_k
        h_tilde: (K,) BD_k -> BR
        f: (K, Q) BD_k -> RIS
        g: (Q,) RIS -> BR
        b: (K, Q+1) derived, row k is b_k with b_k^H v = (h~_k + g^H Theta f_k) h_k v_{Q+1}
    """
    h: np.ndarray
    h_tilde: np.ndarray
    f: np.ndarray
    g: np.ndarray
    b: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        h = _freeze(self.h).reshape(-1)
        h_tilde = _freeze(self.h_tilde).reshape(-1)
        f = _freeze(np.atleast_2d(self.f))
        g = _freeze(self.g).reshape(-1)
        k = h.shape[0]
        if h_tilde.shape[0] != k or f.shape[0] != k:
            raise ScenarioValidationError("h, h_tilde and f must have K rows")
        if f.shape[1] != g.shape[0]:
            raise ScenarioValidationError("f rows and g must both have length Q_ris")
        stacked = np.concatenate(
            [h[:, None] * np.conj(g)[None, :] * f, (h * h_tilde)[:, None]],
            axis=1,
        )
        if not np.all(np.isfinite(stacked)):
            raise ScenarioValidationError("channel entries must be finite")
        object.__setattr__(self, 'h', h)
        object.__setattr__(self, 'h_tilde', h_tilde)
        object.__setattr__(self, 'f', f)
        object.__setattr__(self, 'g', g)
        object.__setattr__(self, 'b', _freeze(np.conj(stacked)))

    @property
    def k(self) -> int:
        return int(self.h.shape[0])

    @property
    def q_ris(self) -> int:
        return int(self.g.shape[0])

    def without_ris(self) -> 'ChannelSet':
        """Same realization with the RIS path removed (g = 0)."""
        return ChannelSet(h=self.h, h_tilde=self.h_tilde, f=self.f, g=np.zeros_like(self.g))

    def permuted(self, sequence: Sequence[int]) -> 'ChannelSet':
        """Reindex BDs so that new BD i is old BD ``sequence[i]``."""
        idx = np.asarray(sequence, dtype=int)
        return ChannelSet(h=self.h[idx], h_tilde=self.h_tilde[idx], f=self.f[idx], g=self.g)
