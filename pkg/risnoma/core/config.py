"""
Solver configuration module.

Provides configuration for every stage of the alternating optimizer.
Open for extension through custom configurations.
"""
from dataclasses import dataclass, field, replace
from typing import Any, Dict

# Strict-ordering margin shared by the power allocation, SCA and AO stages.
EPS_ORD = 1e-9


@dataclass(frozen=True)
class PenaltyConfig:
    """
    Penalty configuration for the auxiliary-variable equality a_k = b_k^H v.

    ``mu`` is a scale: the optimizer starts at ``mu * max_k w_k``.
    """
    mu: float = 10.0
    mu_growth: float = 5.0
    mu_max: float = 1e8
    eps_pen: float = 1e-6

    def __post_init__(self):
        if self.mu <= 0:
            raise ValueError(f"mu must be positive, got {self.mu}")
        if self.mu_growth < 1:
            raise ValueError(f"mu_growth must be >= 1, got {self.mu_growth}")
        if self.eps_pen <= 0:
            raise ValueError(f"eps_pen must be positive, got {self.eps_pen}")
        if self.mu_max < self.mu:
            raise ValueError("mu_max must not be below mu")

    def with_mu(self, mu: float) -> 'PenaltyConfig':
        """Return a copy with a different penalty weight (capped)."""
        return replace(self, mu=min(mu, self.mu_max))

    def escalate(self) -> 'PenaltyConfig':
        """Multiply mu by the growth factor, capped at mu_max."""
        return self.with_mu(self.mu * self.mu_growth)

    @property
    def at_cap(self) -> bool:
        """True once mu has reached mu_max."""
        return self.mu >= self.mu_max


@dataclass(frozen=True)
class BarrierConfig:
    """
    Log-barrier interior point settings.

    Controls the convex QCQP solver used by the SCA stage.
    """
    t0: float = 1.0
    t_growth: float = 10.0
    gap_tol: float = 1e-9
    newton_tol: float = 1e-9
    kkt_tol: float = 1e-7
    max_outer: int = 60
    max_newton: int = 80
    alpha: float = 0.01  # line-search sufficient decrease
    beta: float = 0.5    # line-search shrink

    def __post_init__(self):
        if self.t_growth <= 1:
            raise ValueError("t_growth must exceed 1")
        if not (0 < self.alpha < 0.5) or not (0 < self.beta < 1):
            raise ValueError("line-search parameters out of range")


@dataclass(frozen=True)
class ScaConfig:
    """SCA and feasibility-search loop settings."""
    eps_sca: float = 1e-6
    max_iter: int = 50
    eps_feas: float = 1e-8
    max_feas_iter: int = 50
    eps_ord: float = EPS_ORD


@dataclass(frozen=True)
class ManifoldConfig:
    """
    Riemannian descent settings.

    ``tol`` is relative to max(1, f); ``fallback_step`` is used when
    the quadratic term vanishes.
    """
    tol: float = 1e-9
    max_iter: int = 500
    grad_tol: float = 1e-10
    fallback_step: float = 1.0
    power_tol: float = 1e-8
    power_max_iter: int = 10000
    max_halvings: int = 30


@dataclass(frozen=True)
class AOConfig:
    """Alternating-optimization driver settings."""
    eps_ao: float = 1e-4
    max_iter: int = 30
    order_enum_cap: int = 5
    repair_attempts: int = 3
    random_ris_draws: int = 1


@dataclass(frozen=True)
class SolverConfig:
    """
    Complete solver configuration.

    Centralizes all configuration options for the optimizer.
    Extend by creating new config classes.
    """
    penalty: PenaltyConfig = field(default_factory=PenaltyConfig)
    barrier: BarrierConfig = field(default_factory=BarrierConfig)
    sca: ScaConfig = field(default_factory=ScaConfig)
    manifold: ManifoldConfig = field(default_factory=ManifoldConfig)
    ao: AOConfig = field(default_factory=AOConfig)

    @classmethod
    def default(cls) -> 'SolverConfig':
        """Create default configuration."""
        return cls()

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SolverConfig':
        """
        Create from a nested dictionary (e.g. a ``[solver]`` TOML table).

        Unknown sections or keys raise TypeError from the dataclass
        constructors; callers translate that into a config error.
        """
        sections = {
            'penalty': PenaltyConfig,
            'barrier': BarrierConfig,
            'sca': ScaConfig,
            'manifold': ManifoldConfig,
            'ao': AOConfig,
        }
        unknown = set(data) - set(sections)
        if unknown:
            raise TypeError(f"unknown solver sections: {sorted(unknown)}")
        kwargs = {name: factory(**data.get(name, {})) for name, factory in sections.items()}
        return cls(**kwargs)
