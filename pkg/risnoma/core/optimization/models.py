"""
Data models for the alternating optimizer.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..manifold.models import BeamVector
from ..power.models import ReflectionCoefficients


class SolveStatus(str, Enum):
    """Outcome of a solve."""
    CONVERGED = 'converged'
    INFEASIBLE = 'infeasible'
    ITERATION_CAPPED = 'iteration-capped'


@dataclass(frozen=True)
class DecodingOrder:
    """
    SIC decoding order.

    Attributes:
        pi: pi[k] is the 0-based position at which BD k is decoded
    """
    pi: Tuple[int, ...]

    def __post_init__(self):
        pi = tuple(int(p) for p in self.pi)
        if sorted(pi) != list(range(len(pi))):
            raise ValueError(f"decoding order must be a permutation of 0..K-1, got {pi}")
        object.__setattr__(self, 'pi', pi)

    @classmethod
    def identity(cls, k: int) -> 'DecodingOrder':
        return cls(tuple(range(k)))

    @classmethod
    def from_sequence(cls, sequence: Sequence[int]) -> 'DecodingOrder':
        """Build from the list of BDs in decoding sequence (first decoded first)."""
        pi = [0] * len(sequence)
        for position, bd in enumerate(sequence):
            pi[int(bd)] = position
        return cls(tuple(pi))

    @property
    def k(self) -> int:
        return len(self.pi)

    @property
    def sequence(self) -> Tuple[int, ...]:
        """BD indices in decoding sequence."""
        return tuple(int(i) for i in np.argsort(self.pi))

    def __str__(self) -> str:
        return '>'.join(str(bd + 1) for bd in self.sequence)


@dataclass
class SolveTraces:
    """
    Per-iteration bookkeeping of one fixed-order solve.

    Attributes:
        objective: sum rate (bits/s/Hz) at every accepted iterate
        penalty_residual: relative max |a_k - b_k^H v| after each v-update
        mu: penalty weight used in each iteration
        sca_iterations: SCA subproblems solved per iteration
        descent_iterations: manifold steps per iteration
        rejected_steps: iterations whose candidate was not accepted
        repairs: ordering repairs performed
    """
    objective: List[float] = field(default_factory=list)
    penalty_residual: List[float] = field(default_factory=list)
    mu: List[float] = field(default_factory=list)
    sca_iterations: List[int] = field(default_factory=list)
    descent_iterations: List[int] = field(default_factory=list)
    rejected_steps: int = 0
    repairs: int = 0

    @property
    def iterations(self) -> int:
        return len(self.mu)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'objective': list(self.objective),
            'penalty_residual': list(self.penalty_residual),
            'mu': list(self.mu),
            'sca_iterations': list(self.sca_iterations),
            'descent_iterations': list(self.descent_iterations),
            'rejected_steps': self.rejected_steps,
            'repairs': self.repairs,
        }


@dataclass
class SolveResult:
    """
    Optimized reflection coefficients and beam for one channel realization.

    ``w`` and ``per_bd_rates`` use the original BD indexing.

    Attributes:
        w: reflection coefficients (None when infeasible)
        v: beam vector (None for schemes without RIS or when infeasible)
        order: decoding order (None for orthogonal access or when infeasible)
        per_bd_rates: (K,) rates in bits/s/Hz
        sum_rate_bits: sum rate in bits/s/Hz
        traces: convergence bookkeeping
        status: converged, infeasible or iteration-capped
        scheme: name of the scheme that produced the result
        orders_evaluated: decoding orders tried
    """
    w: Optional[ReflectionCoefficients]
    v: Optional[BeamVector]
    order: Optional[DecodingOrder]
    per_bd_rates: np.ndarray
    sum_rate_bits: float
    traces: SolveTraces = field(default_factory=SolveTraces)
    status: SolveStatus = SolveStatus.CONVERGED
    scheme: str = 'proposed'
    orders_evaluated: int = 1

    @classmethod
    def infeasible(
        cls,
        k: int,
        order: Optional[DecodingOrder] = None,
        traces: Optional[SolveTraces] = None,
        scheme: str = 'proposed',
    ) -> 'SolveResult':
        return cls(
            w=None,
            v=None,
            order=order,
            per_bd_rates=np.zeros(k),
            sum_rate_bits=float('nan'),
            traces=traces or SolveTraces(),
            status=SolveStatus.INFEASIBLE,
            scheme=scheme,
        )

    @property
    def feasible(self) -> bool:
        return self.status != SolveStatus.INFEASIBLE

    def to_dict(self) -> Dict[str, Any]:
        return {
            'scheme': self.scheme,
            'status': self.status.value,
            'sum_rate_bits': self.sum_rate_bits,
            'per_bd_rates': [float(r) for r in self.per_bd_rates],
            'w': self.w.to_list() if self.w is not None else None,
            'theta': [float(t) for t in self.v.theta] if self.v is not None else None,
            'order': str(self.order) if self.order is not None else None,
            'orders_evaluated': self.orders_evaluated,
            'traces': self.traces.to_dict(),
        }


@dataclass
class RateReport:
    """
    Independent recomputation of a result's rates and constraints.

    Attributes:
        per_bd_rates: (K,) recomputed rates
        sum_rate_bits: recomputed sum rate
        gains: (K,) recomputed combined gains H_k (linear, unnormalized)
        violations: human-readable constraint violations; empty when valid
    """
    per_bd_rates: np.ndarray
    sum_rate_bits: float
    gains: np.ndarray
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations
