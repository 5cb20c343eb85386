"""
Data models for baselines module.
"""
from enum import Enum


class BaselineKind(str, Enum):
    """Comparison schemes."""
    RANDOM_RIS = 'random_ris'
    NOMABC_NO_RIS = 'nomabc_no_ris'
    OMABC_NO_RIS = 'omabc_no_ris'
