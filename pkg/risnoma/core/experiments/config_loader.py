"""
TOML experiment configuration.

Layout::

    [scenario]            k, q_ris, p_t_dbm, sigma2_dbm, r_min, rho_db, seed
    [scenario.geometry]   ct, ris, br, bd_x_range, bd_y_range
    [scenario.path_loss]  ct_bd, bd_br, bd_ris, ris_br   (exponents)
    [scenario.rician]     ct_bd, bd_br, bd_ris, ris_br   (kappa)
    [sweep]               preset, variable, values, trials, schemes, parallel
    [solver.<section>]    penalty, barrier, sca, manifold, ao

Explicit keys override the preset; command-line overrides win over both.
"""
from dataclasses import asdict, dataclass, replace
from pathlib import Path
from typing import Any, Dict, Optional, Union

import toml

from ..channel.models import Geometry, LinkClassValues, ScenarioConfig, db_to_linear, dbm_to_mw
from ..config import SolverConfig
from ..errors import ConfigError
from ..logging import get_logger
from .models import SweepPlan
from .presets import default_scenario, get_preset

logger = get_logger(__name__)

_SCENARIO_KEYS = {'k', 'q_ris', 'p_t_dbm', 'sigma2_dbm', 'r_min', 'rho_db', 'seed',
                  'geometry', 'path_loss', 'rician'}
_GEOMETRY_KEYS = {'ct', 'ris', 'br', 'bd_x_range', 'bd_y_range'}
_LINK_KEYS = {'ct_bd', 'bd_br', 'bd_ris', 'ris_br'}
_SWEEP_KEYS = {'preset', 'variable', 'values', 'trials', 'schemes', 'parallel'}
_TOP_KEYS = {'scenario', 'sweep', 'solver'}


@dataclass(frozen=True)
class ExperimentConfig:
    """
    A loaded experiment.

    Attributes:
        plan: sweep to run
        parallel: worker processes
    """
    plan: SweepPlan
    parallel: int = 1


def _check_keys(table: Dict[str, Any], allowed: set, where: str) -> None:
    unknown = set(table) - allowed
    if unknown:
        raise ConfigError(f"unknown key(s) in [{where}]: {', '.join(sorted(unknown))}")


def _pair(value: Any, name: str):
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ConfigError(f"{name} must be a two-element array, got {value!r}")
    return (float(value[0]), float(value[1]))


def scenario_from_dict(data: Dict[str, Any], base: ScenarioConfig) -> ScenarioConfig:
    """Apply a ``[scenario]`` table on top of ``base``."""
    _check_keys(data, _SCENARIO_KEYS, 'scenario')
    changes: Dict[str, Any] = {}
    if 'k' in data:
        changes['k'] = int(data['k'])
    if 'q_ris' in data:
        changes['q_ris'] = int(data['q_ris'])
    if 'p_t_dbm' in data:
        changes['p_t'] = dbm_to_mw(float(data['p_t_dbm']))
    if 'sigma2_dbm' in data:
        changes['sigma2'] = dbm_to_mw(float(data['sigma2_dbm']))
    if 'r_min' in data:
        r_min = data['r_min']
        changes['r_min'] = tuple(float(r) for r in r_min) if isinstance(r_min, list) else float(r_min)
    if 'rho_db' in data:
        changes['rho'] = db_to_linear(float(data['rho_db']))
    if 'seed' in data:
        changes['seed'] = int(data['seed'])

    if 'geometry' in data:
        geometry = data['geometry']
        _check_keys(geometry, _GEOMETRY_KEYS, 'scenario.geometry')
        points = {key: _pair(value, f"scenario.geometry.{key}") for key, value in geometry.items()}
        changes['geometry'] = replace(base.geometry, **points)
    if 'path_loss' in data:
        _check_keys(data['path_loss'], _LINK_KEYS, 'scenario.path_loss')
        changes['alpha'] = LinkClassValues(**{**asdict(base.alpha), **_floats(data['path_loss'])})
    if 'rician' in data:
        _check_keys(data['rician'], _LINK_KEYS, 'scenario.rician')
        changes['kappa'] = LinkClassValues(**{**asdict(base.kappa), **_floats(data['rician'])})
    return base.with_updates(**changes)


def _floats(table: Dict[str, Any]) -> Dict[str, float]:
    return {key: float(value) for key, value in table.items()}


def build_experiment(
    data: Dict[str, Any],
    preset: Optional[str] = None,
    seed: Optional[int] = None,
    trials: Optional[int] = None,
    parallel: Optional[int] = None,
) -> ExperimentConfig:
    """
    Build an experiment from parsed TOML data plus command-line overrides.

    Raises:
        ConfigError: On unknown keys or invalid values
    """
    try:
        _check_keys(data, _TOP_KEYS, 'top level')
        sweep = dict(data.get('sweep', {}))
        _check_keys(sweep, _SWEEP_KEYS, 'sweep')
        preset = preset or sweep.get('preset')

        plan = get_preset(preset) if preset else None
        base = plan.base if plan is not None else default_scenario()
        base = scenario_from_dict(data.get('scenario', {}), base)

        fields: Dict[str, Any] = {'base': base}
        for key, target in (('variable', 'variable'), ('values', 'values'),
                            ('trials', 'n_trials'), ('schemes', 'schemes')):
            if key in sweep:
                fields[target] = sweep[key]
        if 'solver' in data:
            fields['solver'] = SolverConfig.from_dict(data['solver'])

        if plan is not None:
            plan = replace(plan, **fields)
        else:
            if 'variable' not in fields or 'values' not in fields:
                raise ConfigError("[sweep] needs either a preset or both 'variable' and 'values'")
            plan = SweepPlan(**fields)

        plan = plan.with_overrides(seed=seed, n_trials=trials)
        workers = parallel if parallel is not None else int(sweep.get('parallel', 1))
        if workers < 1:
            raise ConfigError(f"parallel must be >= 1, got {workers}")
    except ConfigError:
        raise
    except (TypeError, ValueError) as e:
        raise ConfigError(f"invalid configuration: {e}") from e

    logger.info(
        f"Experiment: {plan.name or 'custom'} sweep over {plan.variable.value} "
        f"{list(plan.values)}, {plan.n_trials} trials, schemes "
        f"{[s.value for s in plan.schemes]}"
    )
    return ExperimentConfig(plan=plan, parallel=workers)


def load_experiment(
    path: Optional[Union[str, Path]] = None,
    preset: Optional[str] = None,
    seed: Optional[int] = None,
    trials: Optional[int] = None,
    parallel: Optional[int] = None,
) -> ExperimentConfig:
    """
    Load a TOML file (optional when a preset is given) and apply overrides.

    Raises:
        ConfigError: With line and column when the file does not parse
    """
    if path is None:
        if preset is None:
            raise ConfigError("either a config file or a preset is required")
        return build_experiment({}, preset, seed, trials, parallel)

    path = Path(path)
    try:
        data = toml.load(path)
    except toml.TomlDecodeError as e:
        raise ConfigError(f"{path}: {e.msg}", line=e.lineno, column=e.colno) from e
    except OSError as e:
        raise ConfigError(f"{path}: {e.strerror or e}") from e
    return build_experiment(data, preset, seed, trials, parallel)
