"""
Large- and small-scale channel models.
"""
import math
from typing import Union

import numpy as np

from ..errors import ChannelDomainError

ArrayLike = Union[float, np.ndarray]


def path_loss(d: ArrayLike, alpha: float, rho: float) -> ArrayLike:
    """
    Distance-dependent path loss rho * d^(-alpha).

    Args:
        d: link distance in meters (scalar or array)
        alpha: path-loss exponent
        rho: linear gain at the 1 m reference distance

    Returns:
        Linear power gain, same shape as ``d``

    Raises:
        ChannelDomainError: If any distance is not positive
    """
    d_arr = np.asarray(d, dtype=float)
    if np.any(d_arr <= 0):
        raise ChannelDomainError(f"distance must be positive, got {d}")
    loss = rho * d_arr ** (-alpha)
    return float(loss) if loss.ndim == 0 else loss


def los_component(n: int) -> np.ndarray:
    """Deterministic unit-modulus LoS vector (all ones)."""
    return np.ones(n, dtype=complex)


def sample_rician(kappa: float, n: int, rng: np.random.Generator) -> np.ndarray:
    """
    Draw n unit-power Rician small-scale coefficients.

    sqrt(kappa/(1+kappa)) * LoS + sqrt(1/(1+kappa)) * CN(0, 1).
    ``kappa = inf`` returns the LoS vector; the NLoS draw is still
    consumed so the stream position does not depend on kappa.
    """
    if kappa < 0 or math.isnan(kappa):
        raise ChannelDomainError(f"Rician factor must be non-negative, got {kappa}")
    if n < 1:
        raise ChannelDomainError(f"sample count must be >= 1, got {n}")
    nlos = (rng.standard_normal(n) + 1j * rng.standard_normal(n)) / np.sqrt(2.0)
    if math.isinf(kappa):
        return los_component(n)
    return np.sqrt(kappa / (1.0 + kappa)) * los_component(n) + np.sqrt(1.0 / (1.0 + kappa)) * nlos
