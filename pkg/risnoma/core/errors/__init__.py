"""Solver errors and exceptions."""
from .solver_errors import (
    ExitCodes,
    RisNomaError,
    ChannelDomainError,
    DimensionMismatchError,
    ScenarioValidationError,
    InfeasibleAllocationError,
    OracleRefusedError,
    ManifoldPreconditionError,
    SubproblemInfeasibleError,
    SolverConvergenceError,
    InfeasibleInstanceError,
    OrderEnumerationCapError,
    ConfigError,
    SweepOutputError,
)

__all__ = [
    'ExitCodes',
    'RisNomaError',
    'ChannelDomainError',
    'DimensionMismatchError',
    'ScenarioValidationError',
    'InfeasibleAllocationError',
    'OracleRefusedError',
    'ManifoldPreconditionError',
    'SubproblemInfeasibleError',
    'SolverConvergenceError',
    'InfeasibleInstanceError',
    'OrderEnumerationCapError',
    'ConfigError',
    'SweepOutputError',
]
