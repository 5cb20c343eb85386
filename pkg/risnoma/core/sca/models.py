"""
Data models for SCA module.
"""
from dataclasses import dataclass, field
from typing import List

import numpy as np


@dataclass(frozen=True, eq=False)
class AuxiliaryVars:
    """
    Auxiliary variables a_k standing in for b_k^H v.

    Attributes:
        a: (K,) complex values
    """
    a: np.ndarray

    def __post_init__(self):
        a = np.array(self.a, dtype=complex).reshape(-1)
        if not np.all(np.isfinite(a)):
            raise ValueError("auxiliary variables must be finite")
        a.setflags(write=False)
        object.__setattr__(self, 'a', a)

    @classmethod
    def from_real(cls, z: np.ndarray) -> 'AuxiliaryVars':
        """Rebuild from the stacked real vector [Re a, Im a]."""
        z = np.asarray(z, dtype=float)
        k = z.shape[0] // 2
        return cls(z[:k] + 1j * z[k:2 * k])

    def to_real(self) -> np.ndarray:
        """Stacked real vector [Re a, Im a] of length 2K."""
        return np.concatenate([self.a.real, self.a.imag])

    @property
    def k(self) -> int:
        return int(self.a.shape[0])

    @property
    def power(self) -> np.ndarray:
        """|a_k|^2."""
        return np.abs(self.a) ** 2

    def penalty_residual(self, target: np.ndarray) -> float:
        """max_k |a_k - target_k|."""
        return float(np.max(np.abs(self.a - np.asarray(target, dtype=complex))))


@dataclass
class SubproblemSolution:
    """
    One convex SCA subproblem solution.

    Attributes:
        aux: minimizer
        objective: subproblem objective at the minimizer
        kkt_residual: KKT residual reported by the interior point method
        newton_steps: Newton steps spent (phase I included)
    """
    aux: AuxiliaryVars
    objective: float
    kkt_residual: float
    newton_steps: int = 0


@dataclass
class ScaResult:
    """
    Output of the SCA loop.

    Attributes:
        aux: final auxiliary variables
        trace: penalized objective at each iterate, starting with the init
        iterations: subproblems solved
        converged: False when the iteration cap was reached
        kkt_residuals: per-subproblem KKT residuals
    """
    aux: AuxiliaryVars
    trace: List[float] = field(default_factory=list)
    iterations: int = 0
    converged: bool = True
    kkt_residuals: List[float] = field(default_factory=list)


@dataclass
class FeasibilityResult:
    """
    Output of the feasibility search.

    Attributes:
        aux: point satisfying the linearized constraints
        indicator: final infeasibility indicator max(x, 0)
        iterations: convex problems solved (1 when the guess was feasible)
        trace: indicator after each iteration
    """
    aux: AuxiliaryVars
    indicator: float
    iterations: int
    trace: List[float] = field(default_factory=list)
