"""
Monte-Carlo sweep runner.

Every (value, trial) pair draws one channel realization that all
schemes share. Trial streams come from SeedSequence([seed, trial]) so
results do not depend on the number of workers or their scheduling.
"""
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..baselines.models import BaselineKind
from ..baselines.strategies import get_strategy
from ..channel.generator import generate_channels
from ..channel.models import ChannelSet, ScenarioConfig
from ..config import SolverConfig
from ..logging import get_logger
from ..manifold.models import BeamVector
from ..optimization.coordinator import AlternatingOptimizer
from ..optimization.models import SolveResult
from .models import Scheme, SweepRow, SweepPlan, TrialOutcome

logger = get_logger(__name__)

ProgressCallback = Callable[[int, int], None]


def trial_streams(seed: int, trial: int) -> Tuple[np.random.SeedSequence, np.random.SeedSequence]:
    """Independent (channel, beam) seed sequences for one trial."""
    channel, beam = np.random.SeedSequence([int(seed), int(trial)]).spawn(2)
    return channel, beam


def run_scheme(
    scheme: Scheme,
    ch: ChannelSet,
    cfg: ScenarioConfig,
    solver: SolverConfig,
    beam_seed: np.random.SeedSequence,
) -> SolveResult:
    """
    Evaluate one scheme on a channel realization.

    The proposed optimizer and the random-RIS baseline start from
    generators seeded identically, so their first random beam coincides.
    """
    if scheme == Scheme.PROPOSED:
        rng = np.random.default_rng(beam_seed)
        v0 = BeamVector.random(ch.q_ris, rng)
        return AlternatingOptimizer(cfg, solver, rng).solve(ch, v0)
    strategy = get_strategy(BaselineKind(scheme.value), solver.ao)
    return strategy.run(ch, cfg, np.random.default_rng(beam_seed))


def run_trial(plan: SweepPlan, value_index: int, trial: int) -> List[TrialOutcome]:
    """All schemes on one channel draw."""
    cfg = plan.scenario_for(plan.values[value_index])
    channel_seed, beam_seed = trial_streams(cfg.seed, trial)
    ch = generate_channels(cfg, np.random.default_rng(channel_seed))
    outcomes = []
    for scheme in plan.schemes:
        result = run_scheme(scheme, ch, cfg, plan.solver, beam_seed)
        outcomes.append(TrialOutcome(
            value_index=value_index,
            trial=trial,
            scheme=scheme,
            sum_rate=result.sum_rate_bits if result.feasible else float('nan'),
            feasible=result.feasible,
        ))
    return outcomes


def _trial_worker(task: Tuple[SweepPlan, int, int]) -> List[TrialOutcome]:
    plan, value_index, trial = task
    return run_trial(plan, value_index, trial)


def aggregate(plan: SweepPlan, outcomes: Sequence[TrialOutcome]) -> List[SweepRow]:
    """
    One row per (value, scheme), values outer and schemes in plan order.

    Means and standard errors use feasible trials only.
    """
    cells: Dict[Tuple[int, Scheme], List[TrialOutcome]] = {}
    for outcome in outcomes:
        cells.setdefault((outcome.value_index, outcome.scheme), []).append(outcome)

    rows = []
    for value_index, value in enumerate(plan.values):
        for scheme in plan.schemes:
            cell = sorted(cells.get((value_index, scheme), []), key=lambda o: o.trial)
            feasible = np.array([o.sum_rate for o in cell if o.feasible], dtype=float)
            n = feasible.shape[0]
            mean = float(np.mean(feasible)) if n else float('nan')
            stderr = float(np.std(feasible, ddof=1) / np.sqrt(n)) if n > 1 else (0.0 if n else float('nan'))
            rows.append(SweepRow(
                variable=plan.variable.value,
                value=value,
                scheme=scheme.value,
                mean_sum_rate=mean,
                stderr=stderr,
                feasible_frac=n / plan.n_trials,
                n_trials=plan.n_trials,
            ))
    return rows


def run_sweep(
    plan: SweepPlan,
    parallel: int = 1,
    progress_callback: Optional[ProgressCallback] = None,
) -> List[SweepRow]:
    """
    Run every (value, trial) pair and aggregate per (value, scheme).

    Args:
        plan: sweep definition
        parallel: worker processes; 1 runs in-process
        progress_callback: called with (done, total) after each trial

    Returns:
        Rows in value-major, scheme-minor order
    """
    tasks = [(plan, vi, trial) for vi in range(len(plan.values)) for trial in range(plan.n_trials)]
    total = len(tasks)
    logger.info(f"Running {total} trials with {parallel} worker(s)")

    outcomes: List[TrialOutcome] = []
    if parallel > 1:
        with ProcessPoolExecutor(max_workers=parallel) as executor:
            for done, result in enumerate(executor.map(_trial_worker, tasks), start=1):
                outcomes.extend(result)
                if progress_callback:
                    progress_callback(done, total)
    else:
        for done, task in enumerate(tasks, start=1):
            outcomes.extend(_trial_worker(task))
            if progress_callback:
                progress_callback(done, total)

    rows = aggregate(plan, outcomes)
    logger.info(f"Sweep finished: {len(rows)} rows")
    return rows


def all_infeasible(rows: Sequence[SweepRow]) -> bool:
    """True when no (value, scheme) cell had a single feasible trial."""
    return all(not row.has_feasible for row in rows)
