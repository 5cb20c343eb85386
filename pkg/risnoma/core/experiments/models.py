"""
Data models for experiments module.
"""
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from ..channel.models import ScenarioConfig
from ..config import SolverConfig


class SweepVariable(str, Enum):
    """Scenario parameter swept along the x-axis."""
    Q_RIS = 'q_ris'
    P_T_DBM = 'p_t_dbm'
    R_MIN = 'r_min'


class Scheme(str, Enum):
    """Schemes a sweep can compare."""
    PROPOSED = 'proposed'
    RANDOM_RIS = 'random_ris'
    NOMABC_NO_RIS = 'nomabc_no_ris'
    OMABC_NO_RIS = 'omabc_no_ris'


@dataclass(frozen=True)
class SweepPlan:
    """
    One parameter sweep.

    Attributes:
        variable: swept parameter
        values: sorted, non-empty sweep points
        n_trials: Monte-Carlo trials per point
        schemes: schemes evaluated on every channel draw
        base: scenario the sweep points are derived from
        solver: solver settings
        name: preset name, if any
    """
    variable: SweepVariable
    values: Tuple[float, ...]
    n_trials: int = 100
    schemes: Tuple[Scheme, ...] = (Scheme.PROPOSED,)
    base: ScenarioConfig = field(default_factory=ScenarioConfig)
    solver: SolverConfig = field(default_factory=SolverConfig.default)
    name: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, 'variable', SweepVariable(self.variable))
        object.__setattr__(self, 'values', tuple(float(v) for v in self.values))
        object.__setattr__(self, 'schemes', tuple(Scheme(s) for s in self.schemes))
        if not self.values:
            raise ValueError("sweep values must not be empty")
        if any(b < a for a, b in zip(self.values, self.values[1:])):
            raise ValueError(f"sweep values must be sorted, got {list(self.values)}")
        if self.n_trials < 1:
            raise ValueError(f"n_trials must be >= 1, got {self.n_trials}")
        if not self.schemes:
            raise ValueError("at least one scheme is required")
        if self.variable == SweepVariable.Q_RIS and any(v != int(v) for v in self.values):
            raise ValueError(f"q_ris values must be integers, got {list(self.values)}")

    def scenario_for(self, value: float) -> ScenarioConfig:
        """Base scenario with the swept parameter set to ``value``."""
        if self.variable == SweepVariable.Q_RIS:
            return self.base.with_updates(q_ris=int(value))
        if self.variable == SweepVariable.P_T_DBM:
            return self.base.with_p_t_dbm(value)
        return self.base.with_updates(r_min=value)

    def with_overrides(
        self,
        seed: Optional[int] = None,
        n_trials: Optional[int] = None,
    ) -> 'SweepPlan':
        """Copy with a new base seed and/or trial count."""
        plan = self
        if seed is not None:
            plan = replace(plan, base=plan.base.with_updates(seed=seed))
        if n_trials is not None:
            plan = replace(plan, n_trials=n_trials)
        return plan


@dataclass(frozen=True)
class TrialOutcome:
    """
    One scheme on one channel draw.

    Attributes:
        value_index: index into SweepPlan.values
        trial: trial index
        scheme: scheme evaluated
        sum_rate: bits/s/Hz (NaN when infeasible)
        feasible: whether the scheme met every constraint
    """
    value_index: int
    trial: int
    scheme: Scheme
    sum_rate: float
    feasible: bool


@dataclass(frozen=True)
class SweepRow:
    """
    Aggregate of one (value, scheme) cell.

    Attributes:
        variable: swept parameter name
        value: sweep point
        scheme: scheme name
        mean_sum_rate: mean over feasible trials (NaN if none)
        stderr: standard error of that mean
        feasible_frac: feasible trials / n_trials
        n_trials: trials run
    """
    variable: str
    value: float
    scheme: str
    mean_sum_rate: float
    stderr: float
    feasible_frac: float
    n_trials: int

    def __post_init__(self):
        if not 0.0 <= self.feasible_frac <= 1.0:
            raise ValueError(f"feasible_frac must lie in [0, 1], got {self.feasible_frac}")

    @property
    def n_feasible(self) -> int:
        return int(round(self.feasible_frac * self.n_trials))

    @property
    def has_feasible(self) -> bool:
        return self.feasible_frac > 0.0 and not math.isnan(self.mean_sum_rate)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'variable': self.variable,
            'value': self.value,
            'scheme': self.scheme,
            'mean_sum_rate': self.mean_sum_rate,
            'stderr': self.stderr,
            'feasible_frac': self.feasible_frac,
            'n_trials': self.n_trials,
        }
