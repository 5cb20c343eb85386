"""
Comparison schemes: random phases, NOMA without RIS and TDMA without RIS.
"""
import math
from typing import Dict, Optional

import numpy as np

from ..channel.generator import combined_gains, no_ris_gains
from ..channel.models import ChannelSet, ScenarioConfig
from ..config import AOConfig, EPS_ORD
from ..logging import get_logger
from ..manifold.models import BeamVector
from ..optimization.models import SolveResult, SolveStatus, SolveTraces
from ..optimization.orders import OrderedAllocation, best_order_for_gains
from ..power.models import ReflectionCoefficients
from ..power.rates import rates
from .models import BaselineKind
from .protocols import BaselineStrategy

logger = get_logger(__name__)

QOS_RATE_TOL = 1e-9


def _noma_result(
    best: Optional[OrderedAllocation],
    H: np.ndarray,
    v: Optional[BeamVector],
    kind: BaselineKind,
    traces: SolveTraces,
    orders_evaluated: int,
) -> SolveResult:
    """Map a best-order allocation (normalized gains) to original indexing."""
    k = H.shape[0]
    if best is None:
        result = SolveResult.infeasible(k, traces=traces, scheme=kind.value)
        result.orders_evaluated = orders_evaluated
        return result
    seq = list(best.order.sequence)
    w_perm = best.allocation.w.w
    w = np.empty(k)
    w[seq] = w_perm
    per_bd = np.empty(k)
    per_bd[seq] = rates(w_perm, H[seq], 1.0, 1.0)
    return SolveResult(
        w=ReflectionCoefficients(w),
        v=v.canonical() if v is not None else None,
        order=best.order,
        per_bd_rates=per_bd,
        sum_rate_bits=best.sum_rate_bits,
        traces=traces,
        status=SolveStatus.CONVERGED,
        scheme=kind.value,
        orders_evaluated=orders_evaluated,
    )


def _order_count(k: int, cap: int) -> int:
    return math.factorial(k) if k <= cap else 1


class RandomRisStrategy:
    """Random phase shifts with closed-form reflection coefficients."""

    def __init__(self, n_draws: int = 1, ao: Optional[AOConfig] = None):
        if n_draws < 1:
            raise ValueError(f"n_draws must be >= 1, got {n_draws}")
        self._n_draws = n_draws
        self._ao = ao or AOConfig()

    @property
    def kind(self) -> BaselineKind:
        return BaselineKind.RANDOM_RIS

    def run(self, ch: ChannelSet, cfg: ScenarioConfig, rng: np.random.Generator) -> SolveResult:
        traces = SolveTraces()
        best: Optional[OrderedAllocation] = None
        best_v: Optional[BeamVector] = None
        best_H = np.zeros(ch.k)
        scale = cfg.p_t / cfg.sigma2
        for _ in range(self._n_draws):
            v = BeamVector.random(ch.q_ris, rng)
            H = combined_gains(ch, v) * scale
            candidate = best_order_for_gains(H, cfg.r_min_array, 1.0, 1.0, self._ao.order_enum_cap, EPS_ORD)
            if candidate is not None and (best is None or candidate.sum_rate_bits > best.sum_rate_bits):
                best, best_v, best_H = candidate, v, H
            traces.objective.append(best.sum_rate_bits if best is not None else float('nan'))
        logger.debug(f"Random RIS: {self._n_draws} draw(s), feasible={best is not None}")
        return _noma_result(best, best_H, best_v, self.kind, traces, _order_count(ch.k, self._ao.order_enum_cap))


class NomaNoRisStrategy:
    """NOMA backscatter with the RIS path removed."""

    def __init__(self, ao: Optional[AOConfig] = None):
        self._ao = ao or AOConfig()

    @property
    def kind(self) -> BaselineKind:
        return BaselineKind.NOMABC_NO_RIS

    def run(self, ch: ChannelSet, cfg: ScenarioConfig, rng: Optional[np.random.Generator] = None) -> SolveResult:
        H = no_ris_gains(ch) * (cfg.p_t / cfg.sigma2)
        best = best_order_for_gains(H, cfg.r_min_array, 1.0, 1.0, self._ao.order_enum_cap, EPS_ORD)
        traces = SolveTraces(objective=[best.sum_rate_bits] if best is not None else [])
        return _noma_result(best, H, None, self.kind, traces, _order_count(ch.k, self._ao.order_enum_cap))


class OmaNoRisStrategy:
    """
    Equal-share TDMA without RIS.

    Each BD reflects fully during its 1/K slot; infeasibility is
    reported through the status, not raised.
    """

    @property
    def kind(self) -> BaselineKind:
        return BaselineKind.OMABC_NO_RIS

    def run(self, ch: ChannelSet, cfg: ScenarioConfig, rng: Optional[np.random.Generator] = None) -> SolveResult:
        k = ch.k
        H = no_ris_gains(ch) * (cfg.p_t / cfg.sigma2)
        per_bd = np.log2(1.0 + H) / k
        feasible = bool(np.all(per_bd >= cfg.r_min_array - QOS_RATE_TOL))
        total = float(np.sum(per_bd))
        return SolveResult(
            w=ReflectionCoefficients.ones(k),
            v=None,
            order=None,
            per_bd_rates=per_bd,
            sum_rate_bits=total,
            traces=SolveTraces(objective=[total]),
            status=SolveStatus.CONVERGED if feasible else SolveStatus.INFEASIBLE,
            scheme=self.kind.value,
        )


def random_ris(
    ch: ChannelSet,
    cfg: ScenarioConfig,
    rng: np.random.Generator,
    n_draws: int = 1,
    ao: Optional[AOConfig] = None,
) -> SolveResult:
    """Best of ``n_draws`` random beams, each with closed-form w and best order."""
    return RandomRisStrategy(n_draws, ao).run(ch, cfg, rng)


def nomabc_no_ris(ch: ChannelSet, cfg: ScenarioConfig, ao: Optional[AOConfig] = None) -> SolveResult:
    """Closed-form w and best decoding order on H_k = |h~_k h_k|^2."""
    return NomaNoRisStrategy(ao).run(ch, cfg)


def omabc_no_ris(ch: ChannelSet, cfg: ScenarioConfig) -> SolveResult:
    """rate_k = (1/K) log2(1 + P_T H_k / sigma2) with w_k = 1, no RIS."""
    return OmaNoRisStrategy().run(ch, cfg)


def get_strategy(kind: BaselineKind, ao: Optional[AOConfig] = None) -> BaselineStrategy:
    """Strategy instance for a baseline kind."""
    ao = ao or AOConfig()
    registry: Dict[BaselineKind, BaselineStrategy] = {
        BaselineKind.RANDOM_RIS: RandomRisStrategy(ao.random_ris_draws, ao),
        BaselineKind.NOMABC_NO_RIS: NomaNoRisStrategy(ao),
        BaselineKind.OMABC_NO_RIS: OmaNoRisStrategy(),
    }
    return registry[BaselineKind(kind)]
