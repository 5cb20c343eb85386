"""
Feasibility search for the auxiliary variables.

Every linearized constraint is relaxed by a common slack x, minimized
subject to the relaxed constraints; the linearization point moves to
each solution until x drops to the tolerance.
"""
from typing import Optional, Union

import numpy as np

from ..config import BarrierConfig, ScaConfig
from ..errors import InfeasibleInstanceError
from ..logging import get_logger
from ..power.models import QosTargets, ReflectionCoefficients
from .barrier import BarrierSolver, ConstraintStack, slack_problem, slack_start, trust_radius2
from .models import AuxiliaryVars, FeasibilityResult
from .subproblem import linearized_constraints

logger = get_logger(__name__)

# The slack may go this far below zero so returned points are strictly feasible.
INTERIOR_MARGIN = 1e-6


def find_feasible_start(
    a_guess: AuxiliaryVars,
    w: Union[ReflectionCoefficients, np.ndarray],
    targets: QosTargets,
    p_t: float,
    sigma2: float,
    config: Optional[ScaConfig] = None,
    barrier: Optional[BarrierConfig] = None,
) -> FeasibilityResult:
    """
    Move a_guess onto the QoS and ordering constraints.

    Args:
        a_guess: starting point (e.g. b_k^H v)
        w: reflection coefficients
        targets: QoS thresholds
        p_t: transmit power
        sigma2: noise power
        config: tolerances and iteration cap
        barrier: interior point settings

    Returns:
        FeasibilityResult with indicator <= eps_feas

    Raises:
        InfeasibleInstanceError: If the indicator stalls above eps_feas
    """
    config = config or ScaConfig()
    solver = BarrierSolver(barrier)
    weights = w.w if isinstance(w, ReflectionCoefficients) else np.asarray(w, dtype=float)
    noise = sigma2 / p_t
    n = 2 * a_guess.k

    def constraints_at(a_ref: np.ndarray) -> ConstraintStack:
        forms = linearized_constraints(a_ref, weights, targets, noise, config.eps_ord)
        return ConstraintStack.from_forms(forms, n)

    cons = constraints_at(a_guess.a)
    if cons.m == 0 or np.all(cons.values(a_guess.to_real()) < 0.0):
        return FeasibilityResult(aux=a_guess, indicator=0.0, iterations=1, trace=[0.0])

    aux = a_guess
    indicator = float('inf')
    trace = []
    previous = float('inf')
    for iteration in range(1, config.max_feas_iter + 1):
        z0 = aux.to_real()
        cons = constraints_at(aux.a)
        if np.all(cons.values(z0) < 0.0):
            # relinearized at the last solution, already strictly feasible
            trace.append(0.0)
            return FeasibilityResult(aux=aux, indicator=0.0, iterations=iteration, trace=trace)
        problem = slack_problem(cons, z0, trust_radius2(z0, cons.r), floor=INTERIOR_MARGIN)
        x0 = slack_start(cons, z0, INTERIOR_MARGIN)
        result = solver.minimize(problem, np.append(z0, x0))

        x = float(result.z[n])
        aux = AuxiliaryVars.from_real(result.z[:n])
        indicator = max(x, 0.0)
        trace.append(indicator)
        logger.debug(f"Feasibility iteration {iteration}: x={x:.3e}")

        if x <= config.eps_feas:
            return FeasibilityResult(aux=aux, indicator=indicator, iterations=iteration, trace=trace)
        if previous - x <= config.eps_feas * max(1.0, abs(x)):
            break
        previous = x

    logger.warning(f"Feasibility search stalled at indicator {indicator:.3e}")
    raise InfeasibleInstanceError(indicator, len(trace))
