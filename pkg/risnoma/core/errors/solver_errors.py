"""Solver error codes and exceptions."""
from typing import Dict, Optional


class ExitCodes:
    """CLI exit codes."""
    
    OK = 0
    CONFIG_ERROR = 2
    ALL_INFEASIBLE = 3
    
    MESSAGES: Dict[int, str] = {
        0: 'OK: sweep finished and CSV written.',
        2: 'ECONFIG (2): The configuration file or a command-line override is invalid.',
        3: 'EINFEASIBLE (3): Every scheme was infeasible at every sweep point.',
    }
    
    @classmethod
    def get_message(cls, code: int) -> str:
        """Gets message for exit code."""
        return cls.MESSAGES.get(code, f"Unknown exit code: {code}")


class RisNomaError(Exception):
    """Base class for all risnoma errors."""


class ChannelDomainError(RisNomaError, ValueError):
    """A channel-model argument is outside its domain."""


class DimensionMismatchError(RisNomaError, ValueError):
    """Array lengths of a beam vector and a channel set disagree."""
    
    def __init__(self, expected: int, got: int, what: str = "beam vector"):
        self.expected = expected
        self.got = got
        super().__init__(f"{what} has length {got}, expected {expected}")


class ScenarioValidationError(RisNomaError, ValueError):
    """A scenario configuration violates its invariants."""


class InfeasibleAllocationError(RisNomaError):
    """No reflection coefficients satisfy the QoS constraints."""


class OracleRefusedError(RisNomaError, ValueError):
    """Brute-force oracle refused an instance that is too large."""


class ManifoldPreconditionError(RisNomaError, ValueError):
    """A point handed to a manifold operation is not unit-modulus."""


class SubproblemInfeasibleError(RisNomaError):
    """Convex subproblem has no strictly feasible point."""
    
    def __init__(self, indicator: float, message: Optional[str] = None):
        self.indicator = indicator
        super().__init__(message or f"subproblem infeasible (indicator {indicator:.3e})")


class SolverConvergenceError(RisNomaError):
    """Interior point method stopped before reaching its tolerance."""
    
    def __init__(self, residual: float, iterations: int):
        self.residual = residual
        self.iterations = iterations
        super().__init__(
            f"interior point method did not converge after {iterations} "
            f"Newton steps (KKT residual {residual:.3e})"
        )


class InfeasibleInstanceError(RisNomaError):
    """Feasibility search stalled above its tolerance."""
    
    def __init__(self, indicator: float, iterations: int):
        self.indicator = indicator
        self.iterations = iterations
        super().__init__(
            f"no feasible auxiliary point after {iterations} iterations "
            f"(indicator {indicator:.3e})"
        )


class OrderEnumerationCapError(RisNomaError):
    """Too many BDs to enumerate all decoding orders."""
    
    def __init__(self, k: int, cap: int):
        self.k = k
        self.cap = cap
        super().__init__(
            f"K={k} exceeds the decoding-order enumeration cap {cap}; "
            f"use the heuristic order (descending no-RIS combined gain)"
        )


class ConfigError(RisNomaError):
    """Configuration could not be parsed or validated."""
    
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        location = ""
        if line is not None:
            location = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(f"{message}{location}")


class SweepOutputError(RisNomaError, OSError):
    """Sweep results could not be written."""
    
    def __init__(self, path: str, reason: str):
        self.path = path
        super().__init__(f"cannot write {path}: {reason}")
