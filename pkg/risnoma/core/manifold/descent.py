"""
Riemannian gradient descent for the passive beamforming subproblem.
"""
from typing import Optional

import numpy as np

from ..config import ManifoldConfig
from ..logging import get_logger
from .circle import euclidean_grad, max_step, retract, riemannian_grad
from .models import BeamVector, DescentResult, QuadraticObjective

logger = get_logger(__name__)


def descend(
    obj: QuadraticObjective,
    v0: BeamVector,
    tol: Optional[float] = None,
    max_iter: Optional[int] = None,
    config: Optional[ManifoldConfig] = None,
    keep_iterates: bool = False,
) -> DescentResult:
    """
    Minimize f(v) over unit-modulus v starting from v0.

    Each step: Euclidean gradient, tangent projection, move by the
    step 1/lambda_max and retract. A step that would increase f is
    halved until it does not; the f trace is therefore non-increasing.

    Args:
        obj: quadratic objective
        v0: unit-modulus start point
        tol: stop when |f_t+1 - f_t| <= tol * max(1, f_t+1)
        max_iter: gradient step cap
        config: remaining settings (gradient tolerance, halvings)
        keep_iterates: record every accepted iterate on the result

    Returns:
        DescentResult; ``converged`` is False when max_iter was hit
    """
    config = config or ManifoldConfig()
    tol = config.tol if tol is None else tol
    max_iter = config.max_iter if max_iter is None else max_iter

    v = np.array(v0.v, dtype=complex)
    f = obj.value(v)
    step = max_step(obj, config)
    result = DescentResult(beam=v0, trace=[f], step=step)
    if keep_iterates:
        result.iterates.append(v0)

    converged = False
    for _ in range(max_iter):
        eg = euclidean_grad(obj, v)
        rg = riemannian_grad(eg, v)
        if np.linalg.norm(rg) <= config.grad_tol * max(1.0, float(np.linalg.norm(eg))):
            converged = True
            break

        lam = step
        candidate = None
        for _ in range(config.max_halvings + 1):
            trial = retract(v - lam * rg, previous=v)
            f_trial = obj.value(trial.v)
            if f_trial <= f:
                candidate = trial
                break
            lam *= 0.5
            result.halvings += 1
        if candidate is None:
            logger.warning(
                f"Step halving exhausted after {config.max_halvings} tries; "
                f"stopping at f={f:.6e}"
            )
            converged = True
            break

        f_prev, f = f, f_trial
        v = np.array(candidate.v)
        result.iterations += 1
        result.trace.append(f)
        result.beam = candidate
        if keep_iterates:
            result.iterates.append(candidate)
        if abs(f_prev - f) <= tol * max(1.0, f):
            converged = True
            break

    result.converged = converged
    logger.debug(
        f"Descent finished: {result.iterations} steps, f={f:.6e}, "
        f"halvings={result.halvings}, converged={converged}"
    )
    return result
