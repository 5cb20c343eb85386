"""
Independent audit of a SolveResult.

Gains are recomputed from the raw channels through the phase-shift
matrix form, not from the stacked b_k rows the optimizer used.
"""
import numpy as np

from ..channel.generator import combined_gains_theta, no_ris_gains
from ..channel.models import ChannelSet, ScenarioConfig
from ..config import EPS_ORD
from ..power.allocation import is_strictly_ordered
from ..power.models import BOX_TOL
from ..power.rates import rates, sum_rate
from .models import RateReport, SolveResult

RATE_TOL = 1e-6
MODULUS_TOL = 1e-9


def rate_report(result: SolveResult, ch: ChannelSet, cfg: ScenarioConfig, eps_ord: float = EPS_ORD) -> RateReport:
    """
    Recompute per-BD rates and list every violated constraint.

    Checks QoS, gain ordering, the [0, 1] box, unit modulus and the
    reported sum rate. Results without a decoding order are audited as
    equal-share orthogonal access with full reflection.
    """
    k = ch.k
    if result.w is None:
        return RateReport(
            per_bd_rates=np.zeros(k),
            sum_rate_bits=float('nan'),
            gains=np.zeros(k),
            violations=["result carries no reflection coefficients (infeasible)"],
        )

    H = combined_gains_theta(ch, result.v) if result.v is not None else no_ris_gains(ch)
    w = result.w.w
    violations = []

    if result.order is None:
        per_bd = np.log2(1.0 + w * cfg.p_t * H / cfg.sigma2) / k
        total = float(np.sum(per_bd))
    else:
        seq = list(result.order.sequence)
        per_bd = np.empty(k)
        per_bd[seq] = rates(w[seq], H[seq], cfg.p_t, cfg.sigma2)
        total = sum_rate(w[seq], H[seq], cfg.p_t, cfg.sigma2)
        if not is_strictly_ordered(H[seq], eps_ord):
            violations.append(
                f"ordering: gains {H[seq].tolist()} are not strictly decreasing in order {result.order}"
            )
        if abs(total - float(np.sum(per_bd))) > RATE_TOL:
            violations.append(f"telescoping: sum of rates {np.sum(per_bd):.9f} != {total:.9f}")

    r_min = cfg.r_min_array
    for bd in range(k):
        if per_bd[bd] < r_min[bd] - RATE_TOL:
            violations.append(f"QoS: BD {bd + 1} rate {per_bd[bd]:.6f} < R_min {r_min[bd]:.6f}")
    if np.any(w < -BOX_TOL) or np.any(w > 1.0 + BOX_TOL):
        violations.append(f"box: reflection coefficients outside [0, 1]: {w.tolist()}")
    if result.v is not None and result.v.max_modulus_error > MODULUS_TOL:
        violations.append(f"unit modulus: max deviation {result.v.max_modulus_error:.3e}")
    if abs(total - result.sum_rate_bits) > RATE_TOL:
        violations.append(f"sum rate: recomputed {total:.9f} != reported {result.sum_rate_bits:.9f}")

    return RateReport(per_bd_rates=per_bd, sum_rate_bits=total, gains=H, violations=violations)
