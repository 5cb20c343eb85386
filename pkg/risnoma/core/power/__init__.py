"""
Power allocation module.

SIC rates, the telescoped sum rate and the closed-form optimal power
reflection coefficients, with a brute-force reference for small K.
"""
from .models import ReflectionCoefficients, QosTargets, PowerAllocation, BOX_TOL
from .rates import rate_k, rates, sum_rate, sinr
from .allocation import (
    is_strictly_ordered,
    lower_bounds,
    optimal_w,
    qos_satisfied,
    QOS_TOL,
)
from .oracle import brute_force_w, objective, MAX_ORACLE_K

__all__ = [
    # Models
    'ReflectionCoefficients',
    'QosTargets',
    'PowerAllocation',
    'BOX_TOL',
    # Rates
    'rate_k',
    'rates',
    'sum_rate',
    'sinr',
    # Allocation
    'is_strictly_ordered',
    'lower_bounds',
    'optimal_w',
    'qos_satisfied',
    'QOS_TOL',
    # Oracle
    'brute_force_w',
    'objective',
    'MAX_ORACLE_K',
]
