"""
Channel module.

Scenario geometry, path loss, Rician fading and combined channel gains.
"""
from .models import (
    ChannelSet,
    Geometry,
    LinkClassValues,
    ScenarioConfig,
    db_to_linear,
    dbm_to_mw,
    mw_to_dbm,
)
from .fading import path_loss, sample_rician, los_component
from .generator import (
    generate_channels,
    combined_gain,
    combined_gains,
    combined_gains_theta,
    no_ris_gains,
)

__all__ = [
    'ChannelSet',
    'Geometry',
    'LinkClassValues',
    'ScenarioConfig',
    'db_to_linear',
    'dbm_to_mw',
    'mw_to_dbm',
    'path_loss',
    'sample_rician',
    'los_component',
    'generate_channels',
    'combined_gain',
    'combined_gains',
    'combined_gains_theta',
    'no_ris_gains',
]
