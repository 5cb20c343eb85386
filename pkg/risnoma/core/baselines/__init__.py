"""
Baselines module.

Random-phase RIS, NOMA without RIS and TDMA without RIS.
"""
from .models import BaselineKind
from .protocols import BaselineStrategy
from .strategies import (
    RandomRisStrategy,
    NomaNoRisStrategy,
    OmaNoRisStrategy,
    random_ris,
    nomabc_no_ris,
    omabc_no_ris,
    get_strategy,
)

__all__ = [
    'BaselineKind',
    'BaselineStrategy',
    'RandomRisStrategy',
    'NomaNoRisStrategy',
    'OmaNoRisStrategy',
    'random_ris',
    'nomabc_no_ris',
    'omabc_no_ris',
    'get_strategy',
]
