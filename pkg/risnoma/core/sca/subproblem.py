"""
Linearized auxiliary-variable subproblem.

The nonconvex terms |a_k|^2 that appear on the "greater than" side of
the QoS and ordering constraints are replaced by their tangent
minorant at a reference point. Variables are stacked as
z = [Re a, Im a] so every constraint is a real convex quadratic.
"""
from typing import List, Optional, Union

import numpy as np

from ..config import BarrierConfig, PenaltyConfig, ScaConfig
from ..logging import get_logger
from ..manifold.models import BeamVector
from ..power.models import QosTargets, ReflectionCoefficients
from .barrier import BarrierSolver, ConstraintStack, ConvexQCQP, QuadraticForm
from .models import AuxiliaryVars, SubproblemSolution

logger = get_logger(__name__)

Coefficients = Union[ReflectionCoefficients, np.ndarray]


def f_sca(a: complex, a_ref: complex) -> float:
    """Tangent minorant of |a|^2 at a_ref: 2 Re(conj(a_ref) a) - |a_ref|^2."""
    return float(2.0 * np.real(np.conj(a_ref) * a) - np.abs(a_ref) ** 2)


def penalty_target(b: np.ndarray, v: Union[BeamVector, np.ndarray]) -> np.ndarray:
    """c_k = b_k^H v for every BD."""
    vec = v.v if isinstance(v, BeamVector) else np.asarray(v, dtype=complex)
    return np.asarray(b, dtype=complex).conj() @ vec


def penalized_objective(a: np.ndarray, w: np.ndarray, target: np.ndarray, mu: float) -> float:
    """-sum_k w_k |a_k|^2 + mu sum_k |a_k - c_k|^2."""
    a = np.asarray(a, dtype=complex)
    return float(-np.sum(w * np.abs(a) ** 2) + mu * np.sum(np.abs(a - target) ** 2))


def _coefficients(w: Coefficients) -> np.ndarray:
    return w.w if isinstance(w, ReflectionCoefficients) else np.asarray(w, dtype=float).reshape(-1)


def _modulus_matrix(weights: np.ndarray) -> np.ndarray:
    """P with 0.5 z^T P z = sum_j weights_j |a_j|^2."""
    return np.diag(2.0 * np.concatenate([weights, weights]))


def _minorant_linear(k_count: int, k: int, a_ref: np.ndarray) -> np.ndarray:
    """Linear part of f_sca(a_k, a_ref_k) in z."""
    q = np.zeros(2 * k_count)
    q[k] = 2.0 * a_ref[k].real
    q[k_count + k] = 2.0 * a_ref[k].imag
    return q


def linearized_constraints(
    a_ref: np.ndarray,
    w: np.ndarray,
    targets: QosTargets,
    noise: float,
    eps_ord: float,
) -> List[QuadraticForm]:
    """
    QoS and ordering constraints linearized at a_ref, each as f(z) <= 0.

    QoS (skipped when r_k = 0):
        r_k (sum_{j>k} w_j |a_j|^2 + noise) - w_k f_sca(a_k, a_ref_k) <= 0
    Ordering, for every j > k:
        |a_j|^2 + eps_ord - f_sca(a_k, a_ref_k) <= 0
    """
    k_count = a_ref.shape[0]
    r = targets.r_min
    forms: List[QuadraticForm] = []
    for k in range(k_count):
        lin = _minorant_linear(k_count, k, a_ref)
        ref_power = float(np.abs(a_ref[k]) ** 2)
        if r[k] > 0.0:
            weights = np.zeros(k_count)
            weights[k + 1:] = r[k] * w[k + 1:]
            forms.append(QuadraticForm(
                P=_modulus_matrix(weights),
                q=-w[k] * lin,
                r=r[k] * noise + w[k] * ref_power,
            ))
        for j in range(k + 1, k_count):
            weights = np.zeros(k_count)
            weights[j] = 1.0
            forms.append(QuadraticForm(
                P=_modulus_matrix(weights),
                q=-lin,
                r=eps_ord + ref_power,
            ))
    return forms


class ScaSubproblem:
    """
    Convex subproblem around a reference point.

    minimize  -sum_k w_k f_sca(a_k, a_ref_k) + mu sum_k |a_k - c_k|^2
    subject to the linearized QoS and ordering constraints.
    """

    def __init__(
        self,
        a_ref: AuxiliaryVars,
        w: Coefficients,
        target: np.ndarray,
        targets: QosTargets,
        p_t: float,
        sigma2: float,
        penalty: PenaltyConfig,
        config: Optional[ScaConfig] = None,
    ):
        self.a_ref = a_ref
        self.w = _coefficients(w)
        self.target = np.asarray(target, dtype=complex).reshape(-1)
        self.targets = targets
        self.noise = sigma2 / p_t
        self.penalty = penalty
        self.config = config or ScaConfig()
        if not (self.w.shape[0] == a_ref.k == self.target.shape[0] == targets.k):
            raise ValueError("w, a_ref, b_k^H v and targets must all have K entries")
        self.problem = self._build()

    @property
    def k(self) -> int:
        return self.a_ref.k

    def _build(self) -> ConvexQCQP:
        k_count = self.k
        mu = self.penalty.mu
        a_ref = self.a_ref.a
        n = 2 * k_count
        q0 = -2.0 * np.concatenate([self.w * a_ref.real, self.w * a_ref.imag])
        q0 -= 2.0 * mu * np.concatenate([self.target.real, self.target.imag])
        objective = QuadraticForm(
            P=2.0 * mu * np.eye(n),
            q=q0,
            r=float(np.sum(self.w * np.abs(a_ref) ** 2) + mu * np.sum(np.abs(self.target) ** 2)),
        )
        forms = linearized_constraints(a_ref, self.w, self.targets, self.noise, self.config.eps_ord)
        return ConvexQCQP(objective=objective, constraints=ConstraintStack.from_forms(forms, n))

    def objective_value(self, a: np.ndarray) -> float:
        return self.problem.objective.value(AuxiliaryVars(a).to_real())

    def constraint_values(self, a: np.ndarray) -> np.ndarray:
        return self.problem.constraints.values(AuxiliaryVars(a).to_real())

    def solve(self, solver: Optional[BarrierSolver] = None) -> SubproblemSolution:
        """
        Solve from the reference point.

        Raises:
            SubproblemInfeasibleError: If no strictly feasible point exists
            SolverConvergenceError: If the interior point method fails
        """
        solver = solver or BarrierSolver()
        result = solver.solve(self.problem, self.a_ref.to_real())
        logger.debug(
            f"SCA subproblem solved: objective={result.objective:.9e}, "
            f"kkt={result.kkt_residual:.2e}, newton={result.newton_steps}"
        )
        return SubproblemSolution(
            aux=AuxiliaryVars.from_real(result.z),
            objective=result.objective,
            kkt_residual=result.kkt_residual,
            newton_steps=result.newton_steps,
        )


def solve_sca_subproblem(
    a_ref: AuxiliaryVars,
    w: Coefficients,
    b_set: np.ndarray,
    v: Union[BeamVector, np.ndarray],
    targets: QosTargets,
    p_t: float,
    sigma2: float,
    pen: PenaltyConfig,
    config: Optional[ScaConfig] = None,
    barrier: Optional[BarrierConfig] = None,
) -> AuxiliaryVars:
    """
    Minimizer of the linearized subproblem at a_ref.

    Args:
        a_ref: linearization point
        w: reflection coefficients
        b_set: (K, Q+1) channel rows b_k
        v: current beam vector
        targets: QoS thresholds
        p_t: transmit power
        sigma2: noise power
        pen: penalty weight settings

    Returns:
        New auxiliary variables
    """
    sub = ScaSubproblem(a_ref, w, penalty_target(b_set, v), targets, p_t, sigma2, pen, config)
    return sub.solve(BarrierSolver(barrier)).aux
