"""Command-line interface for clustersim."""

import json
from typing import NoReturn, Optional

import click
from dotenv import load_dotenv

from .config import Config, ExperimentConfig, load_config
from .engine.simulator import initial_state, simulate
from .exceptions import ClusterSimError
from .logging import get_logger, setup_logging
from .network.deployment import assign_ids, deploy
from .persistence import format_csv, roster_frame, trace_frame, write_csv
from .protocols.schema import StrategyKind
from .reporting.experiment import run_experiment
from .validation import PROTOCOL_NAMES, parse_protocol_list, parse_seed_list

# Load environment variables
load_dotenv()

logger = get_logger(__name__)


def _fail(message: str) -> NoReturn:
    click.echo(f"Error: {message}", err=True)
    raise click.Abort()


def _load(ctx: click.Context, config_path: Optional[str]) -> ExperimentConfig:
    settings: Config = ctx.obj["settings"]
    config = load_config(config_path)
    if config_path is None:
        config = config.with_overrides(output_dir=settings.output_dir, workers=settings.workers)
    return config


@click.group()
@click.option("--log-level", default=None, help="Log level (overrides CLUSTERSIM_LOG_LEVEL)")
@click.option("--env-file", type=click.Path(exists=True), help="Extra .env file to load")
@click.pass_context
def main(ctx, log_level: Optional[str], env_file: Optional[str]):
    """clustersim - round-based LEACH / LPCH / UDLPCH simulator for sensor networks."""
    if env_file:
        load_dotenv(env_file, override=True)

    settings = Config()
    setup_logging(
        log_level=log_level or settings.log_level,
        log_file=settings.log_file,
        json_logs=settings.json_logs,
    )

    ctx.ensure_object(dict)
    ctx.obj["settings"] = settings


@main.command()
@click.option("--config", "config_path", type=click.Path(), help="Experiment JSON file")
@click.option("--seeds", "seed_count", type=int, help="Run seeds 1..N")
@click.option("--seed-list", help="Comma-separated seeds, e.g. 1,2,7")
@click.option("--out", "output_dir", type=click.Path(), help="Output directory")
@click.option("--protocols", help=f"Comma-separated subset of {','.join(PROTOCOL_NAMES)}")
@click.option("--max-rounds", type=int, help="Round horizon per run")
@click.option("--workers", type=int, help="Parallel worker processes")
@click.pass_context
def run(
    ctx,
    config_path: Optional[str],
    seed_count: Optional[int],
    seed_list: Optional[str],
    output_dir: Optional[str],
    protocols: Optional[str],
    max_rounds: Optional[int],
    workers: Optional[int],
):
    """Run an experiment and write CSVs, plot tables and the comparison report."""
    try:
        config = _load(ctx, config_path).with_overrides(
            seed_count=seed_count,
            seeds=parse_seed_list(seed_list) if seed_list else None,
            output_dir=output_dir,
            protocols=parse_protocol_list(protocols) if protocols else None,
            max_rounds=max_rounds,
            workers=workers,
        )
        report, _ = run_experiment(config)
    except ClusterSimError as e:
        logger.error("Experiment failed", error=str(e))
        _fail(str(e))

    click.echo(report.render())
    click.echo(f"\nResults written to {config.output_dir}")


@main.command("dump-nodes")
@click.option("--config", "config_path", type=click.Path(), help="Experiment JSON file")
@click.option("--seed", type=int, default=1, show_default=True, help="Deployment seed")
@click.option("--out", "output", type=click.Path(), help="CSV file (stdout when omitted)")
@click.pass_context
def dump_nodes(ctx, config_path: Optional[str], seed: int, output: Optional[str]):
    """Print or save the deployed roster (id, region, x, y) for a seed."""
    try:
        config = _load(ctx, config_path)
        nodes = assign_ids(deploy(config.field, seed, config.radio.e_init))
        frame = roster_frame(nodes)
        if output:
            write_csv(frame, output)
            click.echo(f"Roster of {len(nodes)} nodes saved to {output}")
        else:
            click.echo(format_csv(frame), nl=False)
    except ClusterSimError as e:
        logger.error("Roster dump failed", error=str(e))
        _fail(str(e))


@main.command()
@click.option("--config", "config_path", type=click.Path(), help="Experiment JSON file")
@click.option(
    "--protocol",
    type=click.Choice(PROTOCOL_NAMES, case_sensitive=False),
    required=True,
    help="Protocol to trace",
)
@click.option("--seed", type=int, default=1, show_default=True, help="Run seed")
@click.option("--max-rounds", type=int, help="Round horizon")
@click.option("--out", "output", type=click.Path(), help="CSV file (stdout when omitted)")
@click.pass_context
def trace(
    ctx,
    config_path: Optional[str],
    protocol: str,
    seed: int,
    max_rounds: Optional[int],
    output: Optional[str],
):
    """Write the per-node event log of one run (round, node_id, action, energy_after, target)."""
    try:
        config = _load(ctx, config_path)
        kind = StrategyKind(protocol.lower())
        state = initial_state(config, kind, seed, trace=True)
        series = simulate(config, kind, seed, max_rounds=max_rounds, state=state)
        frame = trace_frame(state.events or [])
        if output:
            write_csv(frame, output)
            click.echo(
                f"Trace of {series.rounds} rounds ({len(frame)} events) saved to {output}"
            )
        else:
            click.echo(format_csv(frame), nl=False)
    except ClusterSimError as e:
        logger.error("Trace failed", error=str(e))
        _fail(str(e))


@main.command("show-config")
@click.option("--config", "config_path", type=click.Path(), help="Experiment JSON file")
@click.pass_context
def show_config(ctx, config_path: Optional[str]):
    """Validate a config file and print it with every default and derived value."""
    try:
        config = _load(ctx, config_path)
    except ClusterSimError as e:
        _fail(str(e))

    click.echo(json.dumps(config.echo(), indent=2, sort_keys=True))


if __name__ == "__main__":
    main(prog_name="clustersim")
