"""
Optimization facade.

Function entry points over AlternatingOptimizer.
"""
from typing import Optional

import numpy as np

from ..channel.models import ChannelSet, ScenarioConfig
from ..config import SolverConfig
from ..manifold.models import BeamVector
from .coordinator import AlternatingOptimizer
from .models import DecodingOrder, SolveResult


def solve(
    ch: ChannelSet,
    cfg: ScenarioConfig,
    solver: Optional[SolverConfig] = None,
    rng: Optional[np.random.Generator] = None,
    v0: Optional[BeamVector] = None,
) -> SolveResult:
    """
    Maximize the sum rate over reflection coefficients, phase shifts and
    decoding order.

    Example:
        >>> ch = generate_channels(cfg, np.random.default_rng(7))
        >>> result = solve(ch, cfg)
        >>> print(result.sum_rate_bits, result.order)
    """
    return AlternatingOptimizer(cfg, solver, rng).solve(ch, v0)


def solve_fixed_order(
    ch: ChannelSet,
    cfg: ScenarioConfig,
    order: DecodingOrder,
    solver: Optional[SolverConfig] = None,
    rng: Optional[np.random.Generator] = None,
    v0: Optional[BeamVector] = None,
) -> SolveResult:
    """Alternating optimization under a single decoding order."""
    return AlternatingOptimizer(cfg, solver, rng).solve_fixed_order(ch, order, v0)
