"""
Log-barrier interior point method for small convex QCQPs.

Solves
    minimize    f_0(z)
    subject to  f_i(z) <= 0,  i = 1..m
where every f is a convex quadratic 0.5 z^T P z + q^T z + r. Newton
centering with backtracking, barrier weight grown geometrically, and a
phase I search when no strictly feasible start is given.
"""
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from ..config import BarrierConfig
from ..errors import SubproblemInfeasibleError, SolverConvergenceError
from ..logging import get_logger

logger = get_logger(__name__)

MIN_STEP = 1e-14
PHASE_ONE_FLOOR = 1.0


@dataclass(frozen=True, eq=False)
class QuadraticForm:
    """f(z) = 0.5 z^T P z + q^T z + r with P symmetric PSD."""
    P: np.ndarray
    q: np.ndarray
    r: float = 0.0

    def value(self, z: np.ndarray) -> float:
        return float(0.5 * z @ self.P @ z + self.q @ z + self.r)

    def gradient(self, z: np.ndarray) -> np.ndarray:
        return self.P @ z + self.q


@dataclass(frozen=True, eq=False)
class ConstraintStack:
    """
    m quadratic constraints stored as stacked arrays.

    Attributes:
        P: (m, n, n)
        q: (m, n)
        r: (m,)
    """
    P: np.ndarray
    q: np.ndarray
    r: np.ndarray

    @classmethod
    def from_forms(cls, forms: Sequence[QuadraticForm], n: int) -> 'ConstraintStack':
        if not forms:
            return cls(P=np.zeros((0, n, n)), q=np.zeros((0, n)), r=np.zeros(0))
        return cls(
            P=np.stack([f.P for f in forms]),
            q=np.stack([f.q for f in forms]),
            r=np.array([f.r for f in forms], dtype=float),
        )

    @property
    def m(self) -> int:
        return int(self.r.shape[0])

    def values(self, z: np.ndarray) -> np.ndarray:
        return 0.5 * np.einsum('i,mij,j->m', z, self.P, z) + self.q @ z + self.r

    def gradients(self, z: np.ndarray) -> np.ndarray:
        return np.einsum('mij,j->mi', self.P, z) + self.q


@dataclass(frozen=True, eq=False)
class ConvexQCQP:
    """Objective plus constraint stack."""
    objective: QuadraticForm
    constraints: ConstraintStack

    @property
    def n(self) -> int:
        return int(self.objective.q.shape[0])

    def max_violation(self, z: np.ndarray) -> float:
        if self.constraints.m == 0:
            return 0.0
        return float(np.max(self.constraints.values(z)))

    def is_strictly_feasible(self, z: np.ndarray) -> bool:
        return self.constraints.m == 0 or bool(np.all(self.constraints.values(z) < 0.0))


@dataclass
class BarrierResult:
    """
    Interior point output.

    Attributes:
        z: minimizer
        objective: f_0(z)
        kkt_residual: max of relative stationarity, complementary
            slackness and primal violation
        newton_steps: Newton steps over all centering rounds
        outer_steps: barrier weight updates
        duality_gap: m / t at exit
        multipliers: dual estimates 1 / (-t f_i(z))
    """
    z: np.ndarray
    objective: float
    kkt_residual: float
    newton_steps: int = 0
    outer_steps: int = 0
    duality_gap: float = 0.0
    multipliers: np.ndarray = field(default_factory=lambda: np.zeros(0))


StopRule = Callable[[np.ndarray], bool]


class BarrierSolver:
    """
    Log-barrier solver for ConvexQCQP instances.

    Example:
        >>> solver = BarrierSolver(BarrierConfig())
        >>> result = solver.solve(problem, z0)
        >>> result.kkt_residual <= 1e-7
    """

    def __init__(self, config: Optional[BarrierConfig] = None):
        self.config = config or BarrierConfig()

    def solve(self, problem: ConvexQCQP, z0: np.ndarray) -> BarrierResult:
        """
        Minimize from z0, running phase I first when z0 is not strictly feasible.

        Raises:
            SubproblemInfeasibleError: If phase I finds no strictly feasible point
            SolverConvergenceError: If the barrier loop runs out of iterations
        """
        z0 = np.asarray(z0, dtype=float).copy()
        extra_steps = 0
        if not problem.is_strictly_feasible(z0):
            z0, extra_steps = self.phase_one(problem, z0)
        result = self.minimize(problem, z0)
        result.newton_steps += extra_steps
        return result

    def minimize(
        self,
        problem: ConvexQCQP,
        z0: np.ndarray,
        stop_when: Optional[StopRule] = None,
    ) -> BarrierResult:
        """
        Barrier method from a strictly feasible z0.

        ``stop_when`` ends the run early as soon as it returns True for
        the current iterate.

        Raises:
            ValueError: If z0 is not strictly feasible
            SolverConvergenceError: If the barrier loop runs out of iterations
        """
        cfg = self.config
        m = problem.constraints.m
        if m == 0:
            return self._unconstrained(problem)

        z = np.asarray(z0, dtype=float).copy()
        if not problem.is_strictly_feasible(z):
            raise ValueError("barrier method needs a strictly feasible start")
        t = cfg.t0
        newton_total = 0
        for outer in range(1, cfg.max_outer + 1):
            z, steps, stopped = self._center(problem, z, t, stop_when)
            newton_total += steps
            if stopped:
                return self._result(problem, z, t, newton_total, outer)
            f0 = problem.objective.value(z)
            if m / t <= cfg.gap_tol * max(1.0, abs(f0)):
                result = self._result(problem, z, t, newton_total, outer)
                logger.debug(
                    f"Barrier converged: outer={outer}, newton={newton_total}, "
                    f"f0={f0:.9e}, kkt={result.kkt_residual:.2e}"
                )
                return result
            t *= cfg.t_growth

        result = self._result(problem, z, t, newton_total, cfg.max_outer)
        raise SolverConvergenceError(result.kkt_residual, newton_total)

    def phase_one(self, problem: ConvexQCQP, z0: np.ndarray) -> Tuple[np.ndarray, int]:
        """
        Find a strictly feasible point near z0.

        Minimizes s over (z, s) subject to f_i(z) <= s, s >= -1 and a
        trust region around z0; succeeds once every f_i(z) < 0.

        Returns:
            (strictly feasible z, Newton steps spent)

        Raises:
            SubproblemInfeasibleError: If the optimal s is non-negative
        """
        cons = problem.constraints
        n, m = problem.n, cons.m
        radius2 = trust_radius2(z0, cons.r)
        augmented = slack_problem(cons, z0, radius2, floor=PHASE_ONE_FLOOR)
        s0 = slack_start(cons, z0, PHASE_ONE_FLOOR)
        y0 = np.append(z0, s0)

        def feasible(y: np.ndarray) -> bool:
            return bool(np.all(cons.values(y[:n]) < 0.0))

        result = self.minimize(augmented, y0, stop_when=feasible)
        if feasible(result.z):
            logger.debug(f"Phase I found a strictly feasible point after {result.newton_steps} steps")
            return result.z[:n], result.newton_steps
        indicator = max(float(result.z[n]), 0.0)
        raise SubproblemInfeasibleError(
            indicator,
            f"no strictly feasible point among {m} constraints (phase I optimum {result.z[n]:.3e})",
        )

    def _unconstrained(self, problem: ConvexQCQP) -> BarrierResult:
        obj = problem.objective
        z = _newton_direction(obj.P, obj.q)
        g0 = obj.gradient(z)
        residual = float(np.linalg.norm(g0)) / max(1.0, float(np.linalg.norm(obj.q)))
        return BarrierResult(
            z=z,
            objective=obj.value(z),
            kkt_residual=residual,
            newton_steps=1,
            outer_steps=1,
        )

    def _center(
        self,
        problem: ConvexQCQP,
        z: np.ndarray,
        t: float,
        stop_when: Optional[StopRule],
    ) -> Tuple[np.ndarray, int, bool]:
        """Newton's method on f_0 - (1/t) sum log(-f_i)."""
        cfg = self.config
        obj, cons = problem.objective, problem.constraints
        inv_t = 1.0 / t
        for step in range(1, cfg.max_newton + 1):
            if stop_when is not None and stop_when(z):
                return z, step - 1, True
            fi = cons.values(z)
            gi = cons.gradients(z)
            d = -1.0 / fi
            grad = obj.gradient(z) + inv_t * (gi.T @ d)
            hess = obj.P + inv_t * ((gi.T * d ** 2) @ gi + np.einsum('m,mij->ij', d, cons.P))
            dz = _newton_direction(hess, grad)
            decrement = float(-grad @ dz)
            s = self._line_search(problem, z, dz, grad, inv_t)
            if s == 0.0:
                return z, step, False
            z = z + s * dz
            if decrement / 2.0 <= cfg.newton_tol * max(1.0, abs(obj.value(z))):
                return z, step, bool(stop_when is not None and stop_when(z))
        return z, cfg.max_newton, bool(stop_when is not None and stop_when(z))

    def _line_search(
        self,
        problem: ConvexQCQP,
        z: np.ndarray,
        dz: np.ndarray,
        grad: np.ndarray,
        inv_t: float,
    ) -> float:
        """Backtrack to stay strictly feasible, then to sufficient decrease."""
        cfg = self.config
        psi0 = _barrier_value(problem, z, inv_t)
        slope = float(grad @ dz)
        s = 1.0
        while s >= MIN_STEP:
            candidate = z + s * dz
            fi = problem.constraints.values(candidate)
            if np.all(fi < 0.0):
                psi = problem.objective.value(candidate) - inv_t * float(np.sum(np.log(-fi)))
                if psi <= psi0 + cfg.alpha * s * slope:
                    return s
            s *= cfg.beta
        return 0.0

    def _result(self, problem: ConvexQCQP, z: np.ndarray, t: float, newton: int, outer: int) -> BarrierResult:
        residual, multipliers = kkt_residual(problem, z, t)
        return BarrierResult(
            z=z,
            objective=problem.objective.value(z),
            kkt_residual=residual,
            newton_steps=newton,
            outer_steps=outer,
            duality_gap=problem.constraints.m / t,
            multipliers=multipliers,
        )


def kkt_residual(problem: ConvexQCQP, z: np.ndarray, t: float) -> Tuple[float, np.ndarray]:
    """
    KKT residual at a central point with dual estimates 1/(-t f_i).

    Returns:
        (residual, multipliers)
    """
    obj, cons = problem.objective, problem.constraints
    g0 = obj.gradient(z)
    fi = cons.values(z)
    with np.errstate(divide='ignore'):
        lam = np.where(fi < 0.0, 1.0 / (-t * fi), 0.0)
    stationarity = float(np.linalg.norm(g0 + cons.gradients(z).T @ lam))
    stationarity /= max(1.0, float(np.linalg.norm(g0)))
    scale = max(1.0, abs(obj.value(z)))
    complementarity = float(np.max(lam * np.abs(fi))) / scale if cons.m else 0.0
    primal = max(0.0, float(np.max(fi))) if cons.m else 0.0
    return max(stationarity, complementarity, primal), lam


def trust_radius2(z0: np.ndarray, constants: np.ndarray) -> float:
    """Squared trust radius for auxiliary bounded searches around z0."""
    return 100.0 * (1.0 + float(z0 @ z0) + float(np.sum(np.abs(constants))))


def slack_start(cons: ConstraintStack, z: np.ndarray, floor: float) -> float:
    """Slack value that puts (z, s) strictly inside slack_problem(cons, z, ., floor)."""
    return max(float(np.max(cons.values(z))), -floor) + 1.0


def slack_problem(cons: ConstraintStack, z0: np.ndarray, radius2: float, floor: float) -> ConvexQCQP:
    """
    Slacked problem over y = (z, s):
        minimize s  s.t.  f_i(z) - s <= 0,  -s - floor <= 0,  ||z - z0||^2 <= radius2
    """
    n, m = z0.shape[0], cons.m
    P = np.zeros((m + 2, n + 1, n + 1))
    q = np.zeros((m + 2, n + 1))
    r = np.zeros(m + 2)
    P[:m, :n, :n] = cons.P
    q[:m, :n] = cons.q
    q[:m, n] = -1.0
    r[:m] = cons.r
    # floor on the slack
    q[m, n] = -1.0
    r[m] = -floor
    # trust region
    P[m + 1, :n, :n] = 2.0 * np.eye(n)
    q[m + 1, :n] = -2.0 * z0
    r[m + 1] = float(z0 @ z0) - radius2
    objective = QuadraticForm(P=np.zeros((n + 1, n + 1)), q=np.eye(n + 1)[n], r=0.0)
    return ConvexQCQP(objective=objective, constraints=ConstraintStack(P=P, q=q, r=r))


def _barrier_value(problem: ConvexQCQP, z: np.ndarray, inv_t: float) -> float:
    fi = problem.constraints.values(z)
    return problem.objective.value(z) - inv_t * float(np.sum(np.log(-fi)))


def _newton_direction(hess: np.ndarray, grad: np.ndarray) -> np.ndarray:
    hess = 0.5 * (hess + hess.T)
    damping = 1e-14 * max(1.0, float(np.max(np.abs(np.diag(hess)))))
    try:
        return np.linalg.solve(hess + damping * np.eye(hess.shape[0]), -grad)
    except np.linalg.LinAlgError:
        return np.linalg.lstsq(hess, -grad, rcond=None)[0]
