"""
Achievable rates under successive interference cancellation.

Every function assumes the identity decoding order: BD k is decoded
k-th and sees interference from BDs j > k.
"""
from typing import Union

import numpy as np

from .models import ReflectionCoefficients

Coefficients = Union[ReflectionCoefficients, np.ndarray]


def _coefficients(w: Coefficients) -> np.ndarray:
    return w.w if isinstance(w, ReflectionCoefficients) else np.asarray(w, dtype=float).reshape(-1)


def rate_k(w: Coefficients, H: np.ndarray, p_t: float, sigma2: float, k: int) -> float:
    """log2(1 + w_k P_T H_k / (sum_{j>k} w_j P_T H_j + sigma2))."""
    w = _coefficients(w)
    H = np.asarray(H, dtype=float)
    interference = float(np.sum(w[k + 1:] * p_t * H[k + 1:]))
    return float(np.log2(1.0 + w[k] * p_t * H[k] / (interference + sigma2)))


def rates(w: Coefficients, H: np.ndarray, p_t: float, sigma2: float) -> np.ndarray:
    """Per-BD rates, shape (K,)."""
    w = _coefficients(w)
    received = w * p_t * np.asarray(H, dtype=float)
    # interference[k] = sum_{j>k} received[j]
    interference = np.concatenate([np.cumsum(received[::-1])[::-1][1:], [0.0]])
    return np.log2(1.0 + received / (interference + sigma2))


def sum_rate(w: Coefficients, H: np.ndarray, p_t: float, sigma2: float) -> float:
    """Telescoped sum rate log2(1 + sum_k w_k P_T H_k / sigma2)."""
    w = _coefficients(w)
    return float(np.log2(1.0 + np.sum(w * p_t * np.asarray(H, dtype=float)) / sigma2))


def sinr(w: Coefficients, H: np.ndarray, p_t: float, sigma2: float) -> np.ndarray:
    """Per-BD SINR after cancellation of earlier-decoded BDs."""
    return np.exp2(rates(w, H, p_t, sigma2)) - 1.0
