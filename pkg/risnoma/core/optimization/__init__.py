"""
Optimization module.

Alternating optimization of reflection coefficients, auxiliary
variables and the RIS beam vector, with decoding-order enumeration
and an independent rate audit.

Example:
    >>> from risnoma.core.optimization import solve, rate_report
    >>> result = solve(channels, cfg)
    >>> assert rate_report(result, channels, cfg).ok
"""
from .models import DecodingOrder, SolveStatus, SolveTraces, SolveResult, RateReport
from .orders import enumerate_orders, heuristic_order, best_order_for_gains, OrderedAllocation
from .coordinator import AlternatingOptimizer
from .facade import solve, solve_fixed_order
from .report import rate_report

__all__ = [
    # Models
    'DecodingOrder',
    'SolveStatus',
    'SolveTraces',
    'SolveResult',
    'RateReport',
    # Orders
    'enumerate_orders',
    'heuristic_order',
    'best_order_for_gains',
    'OrderedAllocation',
    # Coordinator
    'AlternatingOptimizer',
    # Facade
    'solve',
    'solve_fixed_order',
    # Audit
    'rate_report',
]
