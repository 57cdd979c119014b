"""Experiment orchestration: the (protocol, seed) grid, aggregation and comparison."""

from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Tuple

from ..config import ExperimentConfig
from ..engine.aggregate import aggregate
from ..engine.schema import AggregateMetrics, RunSeries
from ..engine.simulator import simulate
from ..logging import get_logger
from ..persistence import ResultWriter
from ..protocols.schema import StrategyKind
from .schema import ComparisonReport, ExpectationCheck, PairwiseDelta, ProtocolSummary

logger = get_logger(__name__)

# (name, subject, baseline, metric, minimum subject/baseline ratio)
EXPECTATIONS = [
    ("lpch_stability", StrategyKind.LPCH, StrategyKind.LEACH, "stability_mean", 1.03),
    ("udlpch_stability", StrategyKind.UDLPCH, StrategyKind.LPCH, "stability_mean", 1.03),
    ("lpch_throughput", StrategyKind.LPCH, StrategyKind.LEACH, "total_packets_mean", 2.0),
    ("udlpch_throughput", StrategyKind.UDLPCH, StrategyKind.LPCH, "total_packets_mean", 1.0),
]

DELTA_PAIRS = [
    (StrategyKind.LPCH, StrategyKind.LEACH),
    (StrategyKind.UDLPCH, StrategyKind.LPCH),
    (StrategyKind.UDLPCH, StrategyKind.LEACH),
]


def _run_one(payload: Tuple[dict, str, int]) -> RunSeries:
    config_data, kind, seed = payload
    config = ExperimentConfig.model_validate(config_data)
    return simulate(config, StrategyKind(kind), seed)


def run_grid(config: ExperimentConfig) -> Dict[StrategyKind, List[RunSeries]]:
    """Run every (protocol, seed) pair, in parallel when ``config.workers > 1``.

    Every protocol consumes the same seed list, hence the same deployments.
    Results come back grouped by protocol in ascending seed order.
    """
    seeds = sorted(config.seeds or [])
    grid = [(kind, seed) for kind in config.protocols for seed in seeds]
    logger.info(
        "Experiment started",
        protocols=[kind.value for kind in config.protocols],
        seeds=len(seeds),
        runs=len(grid),
        workers=config.workers,
    )

    if config.workers > 1:
        data = config.model_dump(mode="json")
        payloads = [(data, kind.value, seed) for kind, seed in grid]
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_run_one, payloads))
    else:
        results = [simulate(config, kind, seed) for kind, seed in grid]

    grouped: Dict[StrategyKind, List[RunSeries]] = {kind: [] for kind in config.protocols}
    for (kind, _), series in zip(grid, results):
        grouped[kind].append(series)
    return grouped


def _pct(subject: float, baseline: float) -> float:
    if baseline == 0:
        return float("inf") if subject > 0 else 0.0
    return (subject - baseline) / baseline * 100


def _ratio(subject: float, baseline: float) -> float:
    if baseline == 0:
        return float("inf") if subject > 0 else 1.0
    return subject / baseline


def summarize_protocol(metrics: AggregateMetrics) -> ProtocolSummary:
    return ProtocolSummary(
        kind=metrics.kind,
        runs=metrics.runs,
        stability_mean=metrics.stability_mean,
        stability_std=metrics.stability_std,
        lifetime_mean=metrics.lifetime_mean,
        lifetime_std=metrics.lifetime_std,
        unstable_mean=metrics.unstable_mean,
        total_packets_mean=metrics.total_packets_mean,
        total_packets_std=metrics.total_packets_std,
        truncated_runs=metrics.truncated_runs,
    )


def compare(
    metrics: Dict[StrategyKind, AggregateMetrics], seeds: List[int]
) -> ComparisonReport:
    """Build the comparison report from per-protocol aggregates.

    Deltas and checks are only produced for pairs whose both protocols ran.
    """
    summaries = {kind: summarize_protocol(m) for kind, m in metrics.items()}
    n_total = next(iter(metrics.values())).n_total if metrics else 0

    deltas = []
    for subject, baseline in DELTA_PAIRS:
        if subject not in summaries or baseline not in summaries:
            continue
        s, b = summaries[subject], summaries[baseline]
        deltas.append(
            PairwiseDelta(
                subject=subject,
                baseline=baseline,
                stability_pct=_pct(s.stability_mean, b.stability_mean),
                lifetime_pct=_pct(s.lifetime_mean, b.lifetime_mean),
                throughput_pct=_pct(s.total_packets_mean, b.total_packets_mean),
                throughput_ratio=_ratio(s.total_packets_mean, b.total_packets_mean),
            )
        )

    checks = []
    for name, subject, baseline, attribute, threshold in EXPECTATIONS:
        if subject not in summaries or baseline not in summaries:
            continue
        observed = _ratio(
            getattr(summaries[subject], attribute), getattr(summaries[baseline], attribute)
        )
        label = "stability period" if attribute == "stability_mean" else "total packets"
        checks.append(
            ExpectationCheck(
                name=name,
                description=f"{subject.value}/{baseline.value} {label}",
                observed=observed,
                threshold=threshold,
                passed=observed >= threshold,
            )
        )

    return ComparisonReport(
        seeds=sorted(seeds), n_total=n_total, summaries=summaries, deltas=deltas, checks=checks
    )


def run_experiment(
    config: ExperimentConfig, writer: Optional[ResultWriter] = None
) -> Tuple[ComparisonReport, Dict[StrategyKind, AggregateMetrics]]:
    """Run the full experiment and write its result files.

    The output directory is checked before any run starts; files are written
    only after every run has finished.

    Raises:
        OutputError: If the output directory is not writable
    """
    writer = writer or ResultWriter(config.output_dir)
    writer.ensure_writable()

    grouped = run_grid(config)
    metrics = {kind: aggregate(series) for kind, series in grouped.items()}
    report = compare(metrics, list(config.seeds or []))
    writer.write_all(metrics, report, echo=config.echo())

    logger.info(
        "Experiment complete",
        runs=sum(len(series) for series in grouped.values()),
        expectations_passed=report.all_passed,
    )
    return report, metrics
