"""
Data models for power allocation module.
"""
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from ..errors import ScenarioValidationError

# Slack allowed on the [0, 1] box when validating computed coefficients.
BOX_TOL = 1e-12


def _readonly(values) -> np.ndarray:
    array = np.array(values, dtype=float).reshape(-1)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class ReflectionCoefficients:
    """
    Per-BD power reflection coefficients.

    Attributes:
        w: (K,) values in [0, 1]
    """
    w: np.ndarray

    def __post_init__(self):
        w = _readonly(self.w)
        if np.any(~np.isfinite(w)) or np.any(w < -BOX_TOL) or np.any(w > 1.0 + BOX_TOL):
            raise ScenarioValidationError(f"reflection coefficients must lie in [0, 1], got {w}")
        w = _readonly(np.clip(w, 0.0, 1.0))
        object.__setattr__(self, 'w', w)

    @classmethod
    def ones(cls, k: int) -> 'ReflectionCoefficients':
        """Full reflection for every BD."""
        return cls(np.ones(k))

    @property
    def k(self) -> int:
        return int(self.w.shape[0])

    def permuted(self, sequence: Sequence[int]) -> 'ReflectionCoefficients':
        return ReflectionCoefficients(self.w[np.asarray(sequence, dtype=int)])

    def to_list(self) -> list:
        return [float(x) for x in self.w]


@dataclass(frozen=True, eq=False)
class QosTargets:
    """
    Linear SINR thresholds r_k = 2^(R_k^min) - 1.

    Attributes:
        r_min: (K,) non-negative thresholds
    """
    r_min: np.ndarray

    def __post_init__(self):
        r = _readonly(self.r_min)
        if np.any(r < 0) or np.any(~np.isfinite(r)):
            raise ScenarioValidationError(f"SINR thresholds must be non-negative, got {r}")
        object.__setattr__(self, 'r_min', r)

    @classmethod
    def from_rates(cls, rates: Union[float, Sequence[float], np.ndarray], k: Optional[int] = None) -> 'QosTargets':
        """
        Build from minimum rates in bits/s/Hz.

        A scalar rate is broadcast to ``k`` BDs.
        """
        rates = np.asarray(rates, dtype=float)
        if rates.ndim == 0:
            if k is None:
                raise ValueError("k is required when broadcasting a scalar rate")
            rates = np.full(k, float(rates))
        if np.any(rates < 0):
            raise ScenarioValidationError(f"minimum rates must be non-negative, got {rates}")
        return cls(np.exp2(rates) - 1.0)

    @property
    def k(self) -> int:
        return int(self.r_min.shape[0])

    @property
    def rates(self) -> np.ndarray:
        """Minimum rates in bits/s/Hz."""
        return np.log2(1.0 + self.r_min)

    def permuted(self, sequence: Sequence[int]) -> 'QosTargets':
        return QosTargets(self.r_min[np.asarray(sequence, dtype=int)])


@dataclass
class PowerAllocation:
    """
    Result of the closed-form allocation.

    Attributes:
        w: coefficients when feasible, else None
        feasible: whether every constraint holds
        reason: why the instance is infeasible
        lower_bounds: per-BD minimum coefficients, when computable
        breakpoint: first index whose coefficient is below 1, if any
    """
    w: Optional[ReflectionCoefficients]
    feasible: bool
    reason: str = ""
    lower_bounds: Optional[np.ndarray] = field(default=None, repr=False)
    breakpoint: Optional[int] = None

    @classmethod
    def infeasible(cls, reason: str, lower_bounds: Optional[np.ndarray] = None) -> 'PowerAllocation':
        return cls(w=None, feasible=False, reason=reason, lower_bounds=lower_bounds)
