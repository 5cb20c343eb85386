"""
Closed-form optimal power reflection coefficients.

For fixed combined gains sorted in decoding order, the first BD reflects
fully and each later BD reflects fully until an earlier BD's QoS
constraint binds; from that BD on every coefficient sits at its QoS
lower bound.
"""
import math

import numpy as np

from ..config import EPS_ORD
from ..errors import InfeasibleAllocationError
from ..logging import get_logger
from .models import BOX_TOL, PowerAllocation, QosTargets, ReflectionCoefficients

logger = get_logger(__name__)

# Relative slack on the QoS check of a computed allocation.
QOS_TOL = 1e-9


def is_strictly_ordered(H: np.ndarray, eps_ord: float = EPS_ORD) -> bool:
    """True when H_1 > H_2 > ... > H_K with relative margin ``eps_ord``."""
    H = np.asarray(H, dtype=float)
    if H.shape[0] < 2:
        return True
    margin = eps_ord * np.maximum(np.abs(H[:-1]), np.finfo(float).tiny)
    return bool(np.all(H[:-1] - H[1:] > margin))


def lower_bounds(H: np.ndarray, targets: QosTargets, p_t: float, sigma2: float) -> np.ndarray:
    """
    Minimum coefficients meeting every QoS target when all later BDs
    also sit at their minimum.

    w_k^LB = (sigma2 r_k / (P_T H_k)) * prod_{j>k} (r_j + 1)

    Raises:
        InfeasibleAllocationError: If H_k = 0 while r_k > 0
    """
    H = np.asarray(H, dtype=float)
    r = targets.r_min
    if H.shape != r.shape:
        raise ValueError(f"H has shape {H.shape}, targets have {r.shape}")
    dead = (H <= 0.0) & (r > 0.0)
    if np.any(dead):
        raise InfeasibleAllocationError(
            f"BD(s) {np.flatnonzero(dead).tolist()} have zero gain but a positive rate target"
        )
    # tail[k] = prod_{j>k} (r_j + 1)
    tail = np.concatenate([np.cumprod((r + 1.0)[::-1])[::-1][1:], [1.0]])
    with np.errstate(divide='ignore', invalid='ignore'):
        lb = np.where(r > 0.0, sigma2 * r * tail / (p_t * H), 0.0)
    return lb


def qos_satisfied(w: np.ndarray, H: np.ndarray, targets: QosTargets, p_t: float, sigma2: float) -> bool:
    """Check w_k P_T H_k >= r_k (sum_{j>k} w_j P_T H_j + sigma2) for all k."""
    received = np.asarray(w, dtype=float) * p_t * np.asarray(H, dtype=float)
    interference = np.concatenate([np.cumsum(received[::-1])[::-1][1:], [0.0]])
    required = targets.r_min * (interference + sigma2)
    return bool(np.all(received >= required * (1.0 - QOS_TOL)))


def optimal_w(
    H: np.ndarray,
    targets: QosTargets,
    p_t: float,
    sigma2: float,
    eps_ord: float = EPS_ORD,
) -> PowerAllocation:
    """
    Optimal reflection coefficients for gains in decoding order.

    Args:
        H: (K,) combined gains, strictly decreasing
        targets: QoS thresholds in the same order
        p_t: transmit power
        sigma2: noise power
        eps_ord: relative ordering margin

    Returns:
        PowerAllocation; ``feasible`` is False (with a reason) when the
        ordering, a lower bound or a QoS constraint cannot be met
    """
    H = np.asarray(H, dtype=float)
    k_count = H.shape[0]
    if not is_strictly_ordered(H, eps_ord):
        return PowerAllocation.infeasible("gains are not strictly decreasing in decoding order")
    try:
        lb = lower_bounds(H, targets, p_t, sigma2)
    except InfeasibleAllocationError as e:
        return PowerAllocation.infeasible(str(e))
    if np.any(lb > 1.0 + BOX_TOL):
        return PowerAllocation.infeasible(
            f"QoS lower bound exceeds full reflection: {lb.round(6).tolist()}", lb
        )

    r = targets.r_min
    noise = sigma2 / p_t
    w = np.ones(k_count)
    breakpoint = None
    for k in range(1, k_count):
        tail = float(np.sum(lb[k + 1:] * H[k + 1:]))
        upper = math.inf
        if H[k] > 0.0:
            for m in range(k):
                if r[m] <= 0.0:
                    continue
                between = float(np.sum(H[m + 1:k]))
                candidate = (H[m] / r[m] - between - tail - noise) / H[k]
                # strict < keeps the smallest m on ties
                if candidate < upper:
                    upper = candidate
        if upper < lb[k] - BOX_TOL * max(1.0, lb[k]):
            return PowerAllocation.infeasible(
                f"upper bound {upper:.6g} below lower bound {lb[k]:.6g} for BD {k}", lb
            )
        if upper < 1.0:
            w[k] = max(upper, lb[k])
            w[k + 1:] = lb[k + 1:]
            breakpoint = k
            break

    w = np.clip(w, 0.0, 1.0)
    if not qos_satisfied(w, H, targets, p_t, sigma2):
        return PowerAllocation.infeasible("QoS constraint violated after assignment", lb)

    logger.debug(f"Optimal w={np.round(w, 6).tolist()} (breakpoint={breakpoint})")
    return PowerAllocation(
        w=ReflectionCoefficients(w),
        feasible=True,
        lower_bounds=lb,
        breakpoint=breakpoint,
    )
