"""
Brute-force reference solution for small allocation problems.

Searches a uniform grid over the first K-1 coefficients and places the
last coefficient at the largest grid value its linear constraints
allow. Used by the test-suite to check the closed form.
"""
import math
from typing import Optional

import numpy as np

from ..errors import OracleRefusedError
from ..logging import get_logger
from .models import QosTargets, ReflectionCoefficients

logger = get_logger(__name__)

MAX_ORACLE_K = 3
_SLACK = 1e-12


def objective(w: np.ndarray, H: np.ndarray) -> float:
    """sum_k w_k H_k, the quantity the allocation maximizes."""
    return float(np.dot(np.asarray(w, dtype=float), np.asarray(H, dtype=float)))


def brute_force_w(
    H: np.ndarray,
    targets: QosTargets,
    p_t: float,
    sigma2: float,
    grid_step: float = 1e-3,
) -> Optional[ReflectionCoefficients]:
    """
    Grid-search the coefficients maximizing sum_k w_k H_k under QoS.

    Args:
        H: (K,) combined gains in decoding order
        targets: QoS thresholds
        p_t: transmit power
        sigma2: noise power
        grid_step: grid resolution on [0, 1]

    Returns:
        Best grid point, or None when no grid point is feasible

    Raises:
        OracleRefusedError: If K > 3
    """
    H = np.asarray(H, dtype=float)
    k_count = H.shape[0]
    if k_count > MAX_ORACLE_K:
        raise OracleRefusedError(f"brute force supports K <= {MAX_ORACLE_K}, got K={k_count}")
    if not 0.0 < grid_step <= 1.0:
        raise ValueError(f"grid_step must lie in (0, 1], got {grid_step}")

    r = targets.r_min
    noise = sigma2 / p_t
    n_points = int(round(1.0 / grid_step)) + 1
    grid = np.linspace(0.0, 1.0, n_points)

    # Leading coefficients: every grid combination, flattened to (N, K-1).
    if k_count > 1:
        mesh = np.meshgrid(*([grid] * (k_count - 1)), indexing='ij')
        lead = np.stack([m.reshape(-1) for m in mesh], axis=1)
    else:
        lead = np.zeros((1, 0))

    last = k_count - 1
    upper = np.ones(lead.shape[0])
    valid = np.ones(lead.shape[0], dtype=bool)
    for k in range(last):
        if r[k] <= 0.0:
            continue
        # w_k H_k >= r_k (sum_{k<j<K} w_j H_j + w_K H_K + noise)
        slack = lead[:, k] * H[k] / r[k] - lead[:, k + 1:].dot(H[k + 1:last]) - noise
        if H[last] > 0.0:
            upper = np.minimum(upper, slack / H[last])
        else:
            valid &= slack >= -_SLACK * max(1.0, noise)

    lower = r[last] * noise / H[last] if H[last] > 0.0 else (0.0 if r[last] <= 0.0 else math.inf)
    w_last = np.floor((upper + _SLACK) / grid_step) * grid_step
    w_last = np.minimum(w_last, 1.0)
    valid &= (w_last >= 0.0) & (w_last >= lower - _SLACK)
    if not np.any(valid):
        logger.debug("Brute force found no feasible grid point")
        return None

    candidates = np.column_stack([lead, w_last])
    scores = np.where(valid, candidates @ H, -np.inf)
    best = candidates[int(np.argmax(scores))]
    return ReflectionCoefficients(np.clip(best, 0.0, 1.0))
