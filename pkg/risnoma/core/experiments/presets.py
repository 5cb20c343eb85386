"""
Built-in scenario and sweep presets.
"""
from typing import Callable, Dict, List, Optional

from ..channel.models import Geometry, LinkClassValues, ScenarioConfig, db_to_linear, dbm_to_mw
from ..errors import ConfigError
from .models import Scheme, SweepPlan, SweepVariable

DEFAULT_TRIALS = 100


def default_scenario() -> ScenarioConfig:
    """
    Reference simulation set-up.

    CT (0,10), RIS (65,10), BR (70,10); BDs uniform on x in [40, 50] at
    y = 0; path-loss exponents 2.5 (CT-BD, BD-BR) and 2.1 (BD-RIS,
    RIS-BR); -30 dB at 1 m; Rician factor 3 on the RIS links, 0
    elsewhere; K = 3, Q_ris = 50, P_T = 35 dBm, sigma2 = -114 dBm,
    R_min = 1 bit/s/Hz.
    """
    return ScenarioConfig(
        k=3,
        q_ris=50,
        p_t=dbm_to_mw(35.0),
        sigma2=dbm_to_mw(-114.0),
        r_min=1.0,
        geometry=Geometry(
            ct=(0.0, 10.0),
            ris=(65.0, 10.0),
            br=(70.0, 10.0),
            bd_x_range=(40.0, 50.0),
            bd_y_range=(0.0, 0.0),
        ),
        alpha=LinkClassValues(ct_bd=2.5, bd_br=2.5, bd_ris=2.1, ris_br=2.1),
        rho=db_to_linear(-30.0),
        kappa=LinkClassValues(ct_bd=0.0, bd_br=0.0, bd_ris=3.0, ris_br=3.0),
        seed=0,
    )


def elements_sweep(base: Optional[ScenarioConfig] = None) -> SweepPlan:
    """Sum rate versus the number of reflecting elements."""
    base = (base or default_scenario()).with_updates(r_min=1.0).with_p_t_dbm(35.0)
    return SweepPlan(
        variable=SweepVariable.Q_RIS,
        values=(10, 20, 30, 40, 50),
        n_trials=DEFAULT_TRIALS,
        schemes=(Scheme.PROPOSED, Scheme.RANDOM_RIS, Scheme.NOMABC_NO_RIS),
        base=base,
        name='fig3',
    )


def power_sweep(base: Optional[ScenarioConfig] = None) -> SweepPlan:
    """Sum rate versus transmit power, including orthogonal access."""
    base = (base or default_scenario()).with_updates(q_ris=50, r_min=1.0)
    return SweepPlan(
        variable=SweepVariable.P_T_DBM,
        values=(30.0, 35.0, 40.0, 45.0),
        n_trials=DEFAULT_TRIALS,
        schemes=(Scheme.PROPOSED, Scheme.RANDOM_RIS, Scheme.NOMABC_NO_RIS, Scheme.OMABC_NO_RIS),
        base=base,
        name='fig4',
    )


def rate_sweep(base: Optional[ScenarioConfig] = None) -> SweepPlan:
    """Sum rate versus the minimum rate requirement."""
    base = (base or default_scenario()).with_updates(q_ris=50).with_p_t_dbm(40.0)
    return SweepPlan(
        variable=SweepVariable.R_MIN,
        values=(0.5, 1.0, 1.5, 2.0),
        n_trials=DEFAULT_TRIALS,
        schemes=(Scheme.PROPOSED, Scheme.RANDOM_RIS, Scheme.NOMABC_NO_RIS),
        base=base,
        name='fig5',
    )


PRESETS: Dict[str, Callable[[Optional[ScenarioConfig]], SweepPlan]] = {
    'fig3': elements_sweep,
    'fig4': power_sweep,
    'fig5': rate_sweep,
}

# Descriptive names accepted wherever a preset name is.
PRESET_ALIASES: Dict[str, str] = {
    'elements_sweep': 'fig3',
    'power_sweep': 'fig4',
    'rate_sweep': 'fig5',
}


def list_presets() -> List[str]:
    return sorted(PRESETS)


def preset_aliases(name: str) -> List[str]:
    """Aliases that resolve to the given preset."""
    return sorted(alias for alias, target in PRESET_ALIASES.items() if target == name)


def get_preset(name: str, base: Optional[ScenarioConfig] = None) -> SweepPlan:
    """
    Look up a preset by name or alias.

    Raises:
        ConfigError: If the name is unknown
    """
    try:
        factory = PRESETS[PRESET_ALIASES.get(name, name)]
    except KeyError:
        raise ConfigError(f"unknown preset {name!r}; choose one of {', '.join(list_presets())}") from None
    return factory(base)
