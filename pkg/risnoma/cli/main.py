"""risnoma CLI - Main commands."""
import logging
from pathlib import Path
from typing import List, Optional

import numpy as np
import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.progress import Progress, SpinnerColumn, TextColumn, BarColumn, TaskProgressColumn
from rich.table import Table

from risnoma.core.errors import ConfigError, ExitCodes, SweepOutputError

app = typer.Typer(
    name="risnoma",
    help="Sum-rate optimizer and Monte-Carlo sweeps for RIS-enhanced NOMA backscatter",
    add_completion=False
)
console = Console()


def configure_logging(verbose: bool) -> None:
    """Route risnoma logs through rich; INFO with --verbose, warnings otherwise."""
    level = logging.INFO if verbose else logging.WARNING
    logging.basicConfig(
        level=level,
        format="%(name)s: %(message)s",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )
    from risnoma import setup_logging
    setup_logging(level)


def fmt_rate(value: float) -> str:
    return "-" if np.isnan(value) else f"{value:.4f}"


@app.command()
def run(
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="Experiment TOML file"),
    out: Path = typer.Option(..., "--out", "-o", help="CSV file to write"),
    preset: Optional[str] = typer.Option(None, "--preset", "-p", help="Built-in sweep preset"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Base seed"),
    trials: Optional[int] = typer.Option(None, "--trials", "-n", help="Monte-Carlo trials per point"),
    parallel: Optional[int] = typer.Option(None, "--parallel", "-j", help="Worker processes"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Show solver progress logs"),
):
    """Run a parameter sweep and write the aggregated CSV."""
    from risnoma.core.experiments import all_infeasible, emit_csv, load_experiment, run_sweep

    configure_logging(verbose)

    try:
        experiment = load_experiment(config, preset=preset, seed=seed, trials=trials, parallel=parallel)
    except ConfigError as e:
        console.print(f"[red]Config error: {e}[/red]")
        raise typer.Exit(ExitCodes.CONFIG_ERROR)

    plan = experiment.plan
    console.print(
        f"[cyan]Sweep[/cyan] {plan.name or 'custom'}: {plan.variable.value} = "
        f"{[v for v in plan.values]}, {plan.n_trials} trials, seed {plan.base.seed}"
    )

    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        TaskProgressColumn(),
        console=console
    ) as progress:
        task = progress.add_task("Running trials", total=len(plan.values) * plan.n_trials)

        def on_progress(done: int, total: int):
            progress.update(task, completed=done)

        rows = run_sweep(plan, parallel=experiment.parallel, progress_callback=on_progress)

    table = Table(title=f"Sum rate vs {plan.variable.value}")
    table.add_column("Value", justify="right")
    table.add_column("Scheme", style="cyan")
    table.add_column("Mean (bits/s/Hz)", justify="right")
    table.add_column("Std. err.", justify="right", style="dim")
    table.add_column("Feasible", justify="right")
    for row in rows:
        table.add_row(
            f"{row.value:g}",
            row.scheme,
            fmt_rate(row.mean_sum_rate),
            fmt_rate(row.stderr),
            f"{row.n_feasible}/{row.n_trials}",
        )
    console.print(table)

    try:
        emit_csv(rows, out)
    except SweepOutputError as e:
        console.print(f"[red]{e}[/red]")
        raise typer.Exit(1)
    console.print(f"[green]Wrote[/green] {out}")

    if all_infeasible(rows):
        console.print(f"[yellow]{ExitCodes.get_message(ExitCodes.ALL_INFEASIBLE)}[/yellow]")
        raise typer.Exit(ExitCodes.ALL_INFEASIBLE)


@app.command()
def presets():
    """List built-in sweep presets."""
    from risnoma.core.experiments import PRESETS, get_preset, list_presets, preset_aliases

    table = Table()
    table.add_column("Preset", style="cyan")
    table.add_column("Aliases")
    table.add_column("Variable")
    table.add_column("Values")
    table.add_column("Schemes")
    table.add_column("Description", style="dim")

    for name in list_presets():
        plan = get_preset(name)
        doc = (PRESETS[name].__doc__ or "").strip()
        table.add_row(
            name,
            ", ".join(preset_aliases(name)),
            plan.variable.value,
            ", ".join(f"{v:g}" for v in plan.values),
            ", ".join(s.value for s in plan.schemes),
            doc,
        )
    console.print(table)


@app.command()
def solve(
    seed: int = typer.Option(0, "--seed", help="Channel seed"),
    q_ris: Optional[int] = typer.Option(None, "--q-ris", help="Number of RIS elements"),
    p_t_dbm: Optional[float] = typer.Option(None, "--p-t-dbm", help="Transmit power in dBm"),
    r_min: Optional[float] = typer.Option(None, "--r-min", help="Minimum rate per BD (bits/s/Hz)"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Show solver progress logs"),
):
    """Solve one channel realization of the default scenario with every scheme."""
    from risnoma.core.channel import generate_channels
    from risnoma.core.config import SolverConfig
    from risnoma.core.errors import ScenarioValidationError
    from risnoma.core.experiments import Scheme, default_scenario, run_scheme, trial_streams
    from risnoma.core.optimization import rate_report

    configure_logging(verbose)

    changes = {'seed': seed}
    if q_ris is not None:
        changes['q_ris'] = q_ris
    if r_min is not None:
        changes['r_min'] = r_min
    try:
        cfg = default_scenario().with_updates(**changes)
        if p_t_dbm is not None:
            cfg = cfg.with_p_t_dbm(p_t_dbm)
    except ScenarioValidationError as e:
        console.print(f"[red]Config error: {e}[/red]")
        raise typer.Exit(ExitCodes.CONFIG_ERROR)

    channel_seed, beam_seed = trial_streams(cfg.seed, 0)
    ch = generate_channels(cfg, np.random.default_rng(channel_seed))
    solver = SolverConfig.default()

    console.print(
        f"K={cfg.k}, Q_ris={cfg.q_ris}, P_T={cfg.p_t_dbm:.1f} dBm, "
        f"R_min={list(cfg.r_min)}, seed={cfg.seed}"
    )

    table = Table()
    table.add_column("Scheme", style="cyan")
    table.add_column("Status")
    table.add_column("Sum rate", justify="right")
    table.add_column("Per-BD rates", justify="right")
    table.add_column("Order")
    table.add_column("Audit")

    audits: List[str] = []
    for scheme in Scheme:
        result = run_scheme(scheme, ch, cfg, solver, beam_seed)
        report = rate_report(result, ch, cfg)
        rates = ", ".join(f"{r:.3f}" for r in result.per_bd_rates) if result.feasible else "-"
        table.add_row(
            scheme.value,
            result.status.value,
            fmt_rate(result.sum_rate_bits),
            rates,
            str(result.order) if result.order is not None else "-",
            "[green]ok[/green]" if report.ok else f"[yellow]{len(report.violations)} issue(s)[/yellow]",
        )
        if result.feasible:
            audits.extend(f"{scheme.value}: {v}" for v in report.violations)

    console.print(table)
    for line in audits:
        console.print(f"[yellow]{line}[/yellow]")


def main():
    """Entry point."""
    app()


if __name__ == "__main__":
    main()
