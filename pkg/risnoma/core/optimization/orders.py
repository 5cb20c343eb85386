"""
Decoding-order enumeration and fixed-gain order selection.
"""
import itertools
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from ..channel.generator import no_ris_gains
from ..channel.models import ChannelSet
from ..config import EPS_ORD
from ..errors import OrderEnumerationCapError
from ..logging import get_logger
from ..power.allocation import optimal_w
from ..power.models import PowerAllocation, QosTargets
from ..power.rates import sum_rate
from .models import DecodingOrder

logger = get_logger(__name__)


def enumerate_orders(k: int, cap: int) -> List[DecodingOrder]:
    """
    All K! decoding orders.

    Raises:
        OrderEnumerationCapError: If K > cap
    """
    if k > cap:
        raise OrderEnumerationCapError(k, cap)
    return [DecodingOrder.from_sequence(seq) for seq in itertools.permutations(range(k))]


def heuristic_order(ch: ChannelSet) -> DecodingOrder:
    """Decode in descending order of the no-RIS combined gain."""
    return DecodingOrder.from_sequence(np.argsort(-no_ris_gains(ch), kind='stable'))


@dataclass
class OrderedAllocation:
    """Best decoding order and allocation for fixed gains."""
    order: DecodingOrder
    allocation: PowerAllocation
    sum_rate_bits: float


def best_order_for_gains(
    H: np.ndarray,
    r_min_rates: np.ndarray,
    p_t: float,
    sigma2: float,
    cap: int,
    eps_ord: float = EPS_ORD,
) -> Optional[OrderedAllocation]:
    """
    Closed-form allocation under every decoding order; keep the best.

    Beyond ``cap`` BDs only the descending-gain order is tried.

    Args:
        H: (K,) gains in original BD indexing
        r_min_rates: (K,) minimum rates in bits/s/Hz, original indexing

    Returns:
        The best feasible order, or None
    """
    H = np.asarray(H, dtype=float)
    r_min_rates = np.asarray(r_min_rates, dtype=float)
    try:
        orders = enumerate_orders(H.shape[0], cap)
    except OrderEnumerationCapError as e:
        logger.warning(str(e))
        orders = [DecodingOrder.from_sequence(np.argsort(-H, kind='stable'))]

    best: Optional[OrderedAllocation] = None
    for order in orders:
        seq = list(order.sequence)
        targets = QosTargets.from_rates(r_min_rates[seq])
        allocation = optimal_w(H[seq], targets, p_t, sigma2, eps_ord)
        if not allocation.feasible:
            continue
        rate = sum_rate(allocation.w, H[seq], p_t, sigma2)
        if best is None or rate > best.sum_rate_bits:
            best = OrderedAllocation(order=order, allocation=allocation, sum_rate_bits=rate)
    return best
