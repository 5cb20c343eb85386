"""
Protocol definitions for baselines module.

Every comparison scheme maps one channel realization to a SolveResult.
"""
from typing import Protocol

import numpy as np

from ..channel.models import ChannelSet, ScenarioConfig
from ..optimization.models import SolveResult
from .models import BaselineKind


class BaselineStrategy(Protocol):
    """Protocol for comparison schemes."""

    @property
    def kind(self) -> BaselineKind:
        """Which scheme this is."""
        ...

    def run(self, ch: ChannelSet, cfg: ScenarioConfig, rng: np.random.Generator) -> SolveResult:
        """
        Evaluate the scheme on one channel realization.

        Args:
            ch: channel realization
            cfg: scenario (powers, QoS)
            rng: stream for schemes that draw random phases

        Returns:
            SolveResult with ``scheme`` set to the kind's value
        """
        ...
