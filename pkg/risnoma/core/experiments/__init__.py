"""
Experiments module.

Scenario presets, TOML experiment files, Monte-Carlo sweeps and CSV
output.

Example:
    >>> experiment = load_experiment(preset='fig3', trials=10)
    >>> rows = run_sweep(experiment.plan, parallel=4)
    >>> emit_csv(rows, 'fig3.csv')
"""
from .models import SweepVariable, Scheme, SweepPlan, SweepRow, TrialOutcome
from .presets import (
    default_scenario,
    elements_sweep,
    power_sweep,
    rate_sweep,
    get_preset,
    list_presets,
    preset_aliases,
    PRESETS,
    PRESET_ALIASES,
)
from .config_loader import ExperimentConfig, build_experiment, load_experiment, scenario_from_dict
from .runner import run_sweep, run_trial, run_scheme, aggregate, all_infeasible, trial_streams
from .csv_io import emit_csv, read_csv, rows_to_frame, COLUMNS

__all__ = [
    # Models
    'SweepVariable',
    'Scheme',
    'SweepPlan',
    'SweepRow',
    'TrialOutcome',
    # Presets
    'default_scenario',
    'elements_sweep',
    'power_sweep',
    'rate_sweep',
    'get_preset',
    'list_presets',
    'preset_aliases',
    'PRESETS',
    'PRESET_ALIASES',
    # Configuration
    'ExperimentConfig',
    'build_experiment',
    'load_experiment',
    'scenario_from_dict',
    # Runner
    'run_sweep',
    'run_trial',
    'run_scheme',
    'aggregate',
    'all_infeasible',
    'trial_streams',
    # CSV
    'emit_csv',
    'read_csv',
    'rows_to_frame',
    'COLUMNS',
]
