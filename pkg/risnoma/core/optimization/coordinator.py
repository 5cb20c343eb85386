"""
Alternating optimization coordinator.

Alternates the closed-form reflection coefficients, the SCA update of
the auxiliary variables and the manifold update of the beam vector for
one decoding order, then picks the best order.
"""
from typing import Iterable, List, Optional, Tuple

import numpy as np

from ..channel.models import ChannelSet, ScenarioConfig
from ..config import PenaltyConfig, SolverConfig
from ..errors import (
    InfeasibleInstanceError,
    OrderEnumerationCapError,
    SolverConvergenceError,
    SubproblemInfeasibleError,
)
from ..logging import get_logger
from ..manifold.descent import descend
from ..manifold.models import BeamVector, QuadraticObjective
from ..power.allocation import is_strictly_ordered, optimal_w
from ..power.models import PowerAllocation, QosTargets, ReflectionCoefficients
from ..power.rates import rates, sum_rate
from ..sca.feasibility import find_feasible_start
from ..sca.models import AuxiliaryVars, ScaResult
from ..sca.solver import run_sca
from .models import DecodingOrder, SolveResult, SolveStatus, SolveTraces
from .orders import enumerate_orders, heuristic_order

logger = get_logger(__name__)

_SOLVER_FAILURES = (InfeasibleInstanceError, SubproblemInfeasibleError, SolverConvergenceError)


class AlternatingOptimizer:
    """
    Joint reflection-coefficient and phase-shift optimizer.

    Works in normalized units: channel rows are scaled by sqrt(P_T / sigma2)
    so the noise-to-power ratio inside every subproblem is 1. Rates are
    unaffected by the scaling.

    Example:
        >>> optimizer = AlternatingOptimizer(cfg, SolverConfig.default(), rng)
        >>> result = optimizer.solve(channels)
        >>> result.sum_rate_bits
    """

    def __init__(
        self,
        cfg: ScenarioConfig,
        solver: Optional[SolverConfig] = None,
        rng: Optional[np.random.Generator] = None,
    ):
        """
        Initialize optimizer.

        Args:
            cfg: scenario (powers and QoS targets)
            solver: solver settings
            rng: stream for the initial beam vector
        """
        self._cfg = cfg
        self._solver = solver or SolverConfig.default()
        self._rng = rng if rng is not None else np.random.default_rng(cfg.seed)

    @property
    def config(self) -> SolverConfig:
        return self._solver

    def solve(self, ch: ChannelSet, v0: Optional[BeamVector] = None) -> SolveResult:
        """
        Best result over all decoding orders.

        Orders are enumerated up to ``ao.order_enum_cap`` BDs; beyond it
        the descending no-RIS gain order is used.
        """
        try:
            orders = enumerate_orders(ch.k, self._solver.ao.order_enum_cap)
        except OrderEnumerationCapError as e:
            logger.warning(str(e))
            orders = [heuristic_order(ch)]

        if v0 is None:
            v0 = BeamVector.random(ch.q_ris, self._rng)
        results = [self.solve_fixed_order(ch, order, v0) for order in orders]
        return self._best(results, ch.k)

    def solve_fixed_order(
        self,
        ch: ChannelSet,
        order: DecodingOrder,
        v0: Optional[BeamVector] = None,
    ) -> SolveResult:
        """
        Alternating optimization under one decoding order.

        Returns:
            SolveResult in original BD indexing; status is infeasible
            when no ordered, QoS-feasible iterate could be reached
        """
        if order.k != ch.k:
            raise ValueError(f"order has {order.k} BDs, channel has {ch.k}")
        seq = list(order.sequence)
        b = ch.permuted(seq).b * np.sqrt(self._cfg.p_t / self._cfg.sigma2)
        targets = QosTargets.from_rates(self._cfg.r_min_array[seq])
        if v0 is None:
            v0 = BeamVector.random(ch.q_ris, self._rng)

        traces = SolveTraces()
        start = self._feasible_start(b, v0, targets, traces)
        if start is None:
            logger.info(f"Order {order}: no feasible starting point")
            return SolveResult.infeasible(ch.k, order, traces)

        v, allocation = start
        w = allocation.w.w
        H = _gains(b, v)
        rate = sum_rate(w, H, 1.0, 1.0)
        traces.objective.append(rate)

        ao = self._solver.ao
        pen = self._solver.penalty.with_mu(self._solver.penalty.mu * max(float(np.max(w)), 1e-12))
        status = SolveStatus.ITERATION_CAPPED
        for iteration in range(1, ao.max_iter + 1):
            traces.mu.append(pen.mu)
            step = self._step(b, v, w, targets, pen, traces)
            if step is None:
                accepted, residual = False, float('inf')
            else:
                v_new, alloc_new, residual = step
                rate_new = sum_rate(alloc_new.w, _gains(b, v_new), 1.0, 1.0) if alloc_new.feasible else -np.inf
                accepted = alloc_new.feasible and rate_new >= rate
            traces.penalty_residual.append(residual)

            if accepted:
                improvement = rate_new - rate
                v, w, rate = v_new, alloc_new.w.w, rate_new
                traces.objective.append(rate)
                logger.debug(
                    f"Order {order} iteration {iteration}: R={rate:.6f}, "
                    f"residual={residual:.2e}, mu={pen.mu:.3g}"
                )
                if improvement < ao.eps_ao and residual <= pen.eps_pen:
                    status = SolveStatus.CONVERGED
                    break
                stalled = improvement < ao.eps_ao
            else:
                traces.rejected_steps += 1
                stalled = True

            if stalled and pen.at_cap:
                logger.info(f"Order {order}: penalty weight capped at {pen.mu:.3g}, residual {residual:.2e}")
                break

            if not accepted or residual > pen.eps_pen:
                pen = pen.escalate()

        if status == SolveStatus.ITERATION_CAPPED:
            logger.info(f"Order {order}: stopped without convergence at R={rate:.6f}")
        return self._result(order, seq, v, w, _gains(b, v), traces, status)

    def _step(
        self,
        b: np.ndarray,
        v: BeamVector,
        w: np.ndarray,
        targets: QosTargets,
        pen: PenaltyConfig,
        traces: SolveTraces,
    ) -> Optional[Tuple[BeamVector, PowerAllocation, float]]:
        """One a-update, v-update and w-update; None when the a-update fails."""
        a0 = AuxiliaryVars(b.conj() @ v.v)
        sca = self._update_auxiliary(a0, w, b, v, targets, pen)
        if sca is None:
            traces.sca_iterations.append(0)
            traces.descent_iterations.append(0)
            return None
        traces.sca_iterations.append(sca.iterations)

        descent = descend(
            QuadraticObjective.from_auxiliary(sca.aux.a, b),
            v,
            config=self._solver.manifold,
        )
        traces.descent_iterations.append(descent.iterations)
        v_new = descent.beam
        matched = b.conj() @ v_new.v
        residual = float(np.max(np.abs(sca.aux.a - matched))) / max(1.0, float(np.max(np.abs(matched))))

        if not is_strictly_ordered(_gains(b, v_new), self._solver.sca.eps_ord):
            repaired = self._repair(b, v_new, targets, traces)
            if repaired is None:
                return v_new, PowerAllocation.infeasible("ordering lost after beam update"), residual
            v_new = repaired[0]
        allocation = optimal_w(_gains(b, v_new), targets, 1.0, 1.0, self._solver.sca.eps_ord)
        return v_new, allocation, residual

    def _update_auxiliary(
        self,
        a0: AuxiliaryVars,
        w: np.ndarray,
        b: np.ndarray,
        v: BeamVector,
        targets: QosTargets,
        pen: PenaltyConfig,
    ) -> Optional[ScaResult]:
        """run_sca from b^H v, falling back to the feasibility search."""
        solver = self._solver
        try:
            return run_sca(a0, w, b, v, targets, 1.0, 1.0, pen, solver.sca, solver.barrier)
        except SubproblemInfeasibleError:
            logger.debug("SCA start infeasible; running feasibility search")
        except SolverConvergenceError as e:
            logger.warning(f"SCA subproblem failed: {e}")
            return None
        try:
            start = find_feasible_start(a0, w, targets, 1.0, 1.0, solver.sca, solver.barrier)
            return run_sca(start.aux, w, b, v, targets, 1.0, 1.0, pen, solver.sca, solver.barrier)
        except _SOLVER_FAILURES as e:
            logger.debug(f"Auxiliary update failed: {e}")
            return None

    def _feasible_start(
        self,
        b: np.ndarray,
        v0: BeamVector,
        targets: QosTargets,
        traces: SolveTraces,
    ) -> Optional[Tuple[BeamVector, PowerAllocation]]:
        """v0 itself when its gains admit a feasible allocation, else a repaired beam."""
        eps_ord = self._solver.sca.eps_ord
        H = _gains(b, v0)
        if is_strictly_ordered(H, eps_ord):
            allocation = optimal_w(H, targets, 1.0, 1.0, eps_ord)
            if allocation.feasible:
                return v0, allocation
        return self._repair(b, v0, targets, traces)

    def _repair(
        self,
        b: np.ndarray,
        v: BeamVector,
        targets: QosTargets,
        traces: SolveTraces,
    ) -> Optional[Tuple[BeamVector, PowerAllocation]]:
        """
        Steer v towards auxiliary values that satisfy ordering and QoS
        with full reflection.
        """
        solver = self._solver
        ones = np.ones(b.shape[0])
        for attempt in range(1, solver.ao.repair_attempts + 1):
            traces.repairs += 1
            a0 = AuxiliaryVars(b.conj() @ v.v)
            try:
                start = find_feasible_start(a0, ones, targets, 1.0, 1.0, solver.sca, solver.barrier)
            except _SOLVER_FAILURES as e:
                logger.debug(f"Repair attempt {attempt} failed: {e}")
                return None
            v = descend(
                QuadraticObjective.from_auxiliary(start.aux.a, b),
                v,
                config=solver.manifold,
            ).beam
            H = _gains(b, v)
            if is_strictly_ordered(H, solver.sca.eps_ord):
                allocation = optimal_w(H, targets, 1.0, 1.0, solver.sca.eps_ord)
                if allocation.feasible:
                    return v, allocation
        logger.debug(f"Repair gave up after {solver.ao.repair_attempts} attempts")
        return None

    def _result(
        self,
        order: DecodingOrder,
        seq: List[int],
        v: BeamVector,
        w: np.ndarray,
        H: np.ndarray,
        traces: SolveTraces,
        status: SolveStatus,
    ) -> SolveResult:
        per_bd = np.empty(len(seq))
        per_bd[seq] = rates(w, H, 1.0, 1.0)
        w_orig = np.empty(len(seq))
        w_orig[seq] = w
        return SolveResult(
            w=ReflectionCoefficients(w_orig),
            v=v.canonical(),
            order=order,
            per_bd_rates=per_bd,
            sum_rate_bits=sum_rate(w, H, 1.0, 1.0),
            traces=traces,
            status=status,
        )

    @staticmethod
    def _best(results: Iterable[SolveResult], k: int) -> SolveResult:
        results = list(results)
        feasible = [r for r in results if r.feasible]
        if not feasible:
            best = SolveResult.infeasible(k)
        else:
            best = max(feasible, key=lambda r: r.sum_rate_bits)
        best.orders_evaluated = len(results)
        logger.info(
            f"Solved {len(results)} decoding order(s): "
            f"{len(feasible)} feasible, best R={best.sum_rate_bits:.6f} ({best.status.value})"
        )
        return best


def _gains(b: np.ndarray, v: BeamVector) -> np.ndarray:
    """Normalized gains |b_k^H v|^2."""
    return np.abs(b.conj() @ v.v) ** 2
