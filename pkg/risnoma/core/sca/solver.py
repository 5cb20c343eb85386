"""
SCA loop for the auxiliary variables.
"""
from typing import Optional, Union

import numpy as np

from ..config import BarrierConfig, PenaltyConfig, ScaConfig
from ..logging import get_logger
from ..manifold.models import BeamVector
from ..power.models import QosTargets, ReflectionCoefficients
from .barrier import BarrierSolver
from .models import AuxiliaryVars, ScaResult
from .subproblem import ScaSubproblem, penalized_objective, penalty_target

logger = get_logger(__name__)


def run_sca(
    init: AuxiliaryVars,
    w: Union[ReflectionCoefficients, np.ndarray],
    b_set: np.ndarray,
    v: Union[BeamVector, np.ndarray],
    targets: QosTargets,
    p_t: float,
    sigma2: float,
    pen: PenaltyConfig,
    config: Optional[ScaConfig] = None,
    barrier: Optional[BarrierConfig] = None,
) -> ScaResult:
    """
    Repeat the linearized subproblem, re-linearizing at each solution.

    The trace holds -sum w|a|^2 + mu sum |a - b^H v|^2 at every accepted
    iterate; it is non-increasing because each subproblem objective
    upper-bounds it and matches it at the linearization point. A
    solution that does not lower the trace (solver tolerance) is
    discarded and the loop stops.

    Args:
        init: starting point, feasible for the linearized constraints
        w: reflection coefficients
        b_set: (K, Q+1) channel rows
        v: current beam vector
        targets: QoS thresholds
        p_t: transmit power
        sigma2: noise power
        pen: penalty settings (mu)
        config: loop tolerances
        barrier: interior point settings

    Returns:
        ScaResult

    Raises:
        SubproblemInfeasibleError: If a subproblem has no feasible point
        SolverConvergenceError: If the interior point method fails
    """
    config = config or ScaConfig()
    solver = BarrierSolver(barrier)
    weights = w.w if isinstance(w, ReflectionCoefficients) else np.asarray(w, dtype=float)
    target = penalty_target(b_set, v)

    aux = init
    current = penalized_objective(aux.a, weights, target, pen.mu)
    result = ScaResult(aux=aux, trace=[current], converged=False)

    for iteration in range(1, config.max_iter + 1):
        sub = ScaSubproblem(aux, weights, target, targets, p_t, sigma2, pen, config)
        solution = sub.solve(solver)
        result.iterations = iteration
        result.kkt_residuals.append(solution.kkt_residual)

        candidate = penalized_objective(solution.aux.a, weights, target, pen.mu)
        if candidate > current:
            logger.debug(f"SCA iteration {iteration} did not decrease the objective; keeping previous point")
            result.converged = True
            break

        change = current - candidate
        aux, current = solution.aux, candidate
        result.aux = aux
        result.trace.append(current)
        if change <= config.eps_sca * max(1.0, abs(current)):
            result.converged = True
            break

    if not result.converged:
        logger.info(f"SCA stopped at the iteration cap ({config.max_iter})")
    logger.debug(f"SCA finished: {result.iterations} iterations, objective={current:.9e}")
    return result
