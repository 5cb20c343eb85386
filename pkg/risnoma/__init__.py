"""
risnoma - Sum-rate optimization for RIS-enhanced NOMA backscatter systems.

Usage:
    >>> import numpy as np
    >>> from risnoma import ScenarioConfig, generate_channels, solve, rate_report
    >>>
    >>> cfg = ScenarioConfig(k=3, q_ris=16)
    >>> ch = generate_channels(cfg, np.random.default_rng(0))
    >>> result = solve(ch, cfg)
    >>> print(result.sum_rate_bits, rate_report(result, ch, cfg).ok)
"""
import logging

# Channel model
from .core.channel import (
    ChannelSet,
    Geometry,
    LinkClassValues,
    ScenarioConfig,
    generate_channels,
    combined_gains,
)

# Configuration
from .core.config import (
    SolverConfig,
    PenaltyConfig,
    BarrierConfig,
    ScaConfig,
    ManifoldConfig,
    AOConfig,
)

# Optimization
from .core.optimization import (
    AlternatingOptimizer,
    SolveResult,
    SolveStatus,
    DecodingOrder,
    solve,
    solve_fixed_order,
    rate_report,
)
from .core.logging import logger_names
from .core.power import optimal_w, sum_rate
from .core.manifold import BeamVector, descend

# Baselines
from .core.baselines import random_ris, nomabc_no_ris, omabc_no_ris

# Experiments
from .core.experiments import (
    SweepPlan,
    SweepRow,
    default_scenario,
    run_sweep,
    emit_csv,
)

__version__ = '1.0.0'


def setup_logging(level=logging.INFO):
    """
    Configure logging for risnoma modules.

    Args:
        level: Logging level (default: logging.INFO)
    """
    for name in logger_names():
        logger = logging.getLogger(name)
        logger.setLevel(level)
        logger.propagate = True


__all__ = [
    'ChannelSet',
    'Geometry',
    'LinkClassValues',
    'ScenarioConfig',
    'generate_channels',
    'combined_gains',
    'SolverConfig',
    'PenaltyConfig',
    'BarrierConfig',
    'ScaConfig',
    'ManifoldConfig',
    'AOConfig',
    'AlternatingOptimizer',
    'SolveResult',
    'SolveStatus',
    'DecodingOrder',
    'solve',
    'solve_fixed_order',
    'rate_report',
    'optimal_w',
    'sum_rate',
    'BeamVector',
    'descend',
    'random_ris',
    'nomabc_no_ris',
    'omabc_no_ris',
    'SweepPlan',
    'SweepRow',
    'default_scenario',
    'run_sweep',
    'emit_csv',
    'setup_logging',
]
