"""
SCA module.

Successive convex approximation for the auxiliary variables a_k,
the log-barrier interior point method that solves each convex
subproblem, and the slack-based feasibility search.
"""
from .models import AuxiliaryVars, SubproblemSolution, ScaResult, FeasibilityResult
from .barrier import (
    QuadraticForm,
    ConstraintStack,
    ConvexQCQP,
    BarrierResult,
    BarrierSolver,
    kkt_residual,
    slack_problem,
    slack_start,
)
from .subproblem import (
    f_sca,
    penalty_target,
    penalized_objective,
    linearized_constraints,
    ScaSubproblem,
    solve_sca_subproblem,
)
from .solver import run_sca
from .feasibility import find_feasible_start, INTERIOR_MARGIN

__all__ = [
    # Models
    'AuxiliaryVars',
    'SubproblemSolution',
    'ScaResult',
    'FeasibilityResult',
    # Interior point
    'QuadraticForm',
    'ConstraintStack',
    'ConvexQCQP',
    'BarrierResult',
    'BarrierSolver',
    'kkt_residual',
    'slack_problem',
    'slack_start',
    # Subproblem
    'f_sca',
    'penalty_target',
    'penalized_objective',
    'linearized_constraints',
    'ScaSubproblem',
    'solve_sca_subproblem',
    # Loops
    'run_sca',
    'find_feasible_start',
    'INTERIOR_MARGIN',
]
