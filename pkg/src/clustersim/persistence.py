"""Result files: per-round CSVs, summary, plot tables, config echo, traces."""

import json
import tempfile
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Union

import pandas as pd

from .engine.schema import AggregateMetrics, TraceEvent
from .exceptions import OutputError
from .logging import get_logger
from .network.deployment import roster_rows
from .network.schema import NodeState
from .protocols.schema import StrategyKind
from .reporting.schema import ComparisonReport

logger = get_logger(__name__)

FLOAT_FORMAT = "%.10g"

ROUND_COLUMNS = [
    "round",
    "dead_mean",
    "alive_mean",
    "packets_mean",
    "ch_r1_mean",
    "ch_r2_mean",
    "energy_mean",
]
SUMMARY_COLUMNS = [
    "protocol",
    "stability_mean",
    "lifetime_mean",
    "total_packets_mean",
    "unstable_mean",
    "stability_std",
    "lifetime_std",
    "total_packets_std",
    "runs",
    "truncated_runs",
]
TRACE_COLUMNS = ["round", "node_id", "action", "energy_after", "target"]

# Plot table file -> aggregated metric it tabulates
PLOT_TABLES = {
    "dead_nodes.csv": "dead_mean",
    "alive_nodes.csv": "alive_mean",
    "throughput.csv": "cumulative_packets_mean",
}


def format_csv(frame: pd.DataFrame) -> str:
    """Render a frame as CSV with a header, '.' decimals and '\\n' line endings."""
    return frame.to_csv(index=False, lineterminator="\n", float_format=FLOAT_FORMAT)


def _write_text(path: Path, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    except OSError as e:
        logger.error("Failed to write result file", file=str(path), error=str(e))
        raise OutputError(f"Cannot write {path}: {e}") from e


def write_csv(frame: pd.DataFrame, path: Union[str, Path]) -> Path:
    path = Path(path)
    _write_text(path, format_csv(frame))
    return path


def round_frame(metrics: AggregateMetrics) -> pd.DataFrame:
    """Per-round means of one protocol."""
    return pd.DataFrame({column: getattr(metrics, column) for column in ROUND_COLUMNS})


def _padded(metrics: AggregateMetrics, attribute: str, length: int) -> List[float]:
    values = list(getattr(metrics, attribute))
    if not values:
        return [0.0] * length
    return values + [values[-1]] * (length - len(values))


def plot_frame(metrics: Mapping[StrategyKind, AggregateMetrics], attribute: str) -> pd.DataFrame:
    """One figure's table: a round column plus one column per protocol.

    Protocols whose networks died earlier hold their final value, which is
    the right continuation for dead/alive counts and cumulative throughput.
    """
    length = max((len(m.round) for m in metrics.values()), default=0)
    table: Dict[str, Any] = {"round": list(range(length))}
    for kind, m in metrics.items():
        table[StrategyKind(kind).value] = _padded(m, attribute, length)
    return pd.DataFrame(table)


def emit_plot_data(
    metrics: Mapping[StrategyKind, AggregateMetrics],
    path: Union[str, Path],
    attribute: str = "dead_mean",
) -> Path:
    """Write a plotting table for one metric across protocols.

    Raises:
        OutputError: If the file cannot be written
    """
    return write_csv(plot_frame(metrics, attribute), path)


def trace_frame(events: Iterable[TraceEvent]) -> pd.DataFrame:
    rows = [
        {
            "round": event.round,
            "node_id": event.node_id,
            "action": event.action.value,
            "energy_after": event.energy_after,
            "target": "" if event.target is None else event.target,
        }
        for event in events
    ]
    return pd.DataFrame(rows, columns=TRACE_COLUMNS)


def roster_frame(nodes: Sequence[NodeState]) -> pd.DataFrame:
    return pd.DataFrame(roster_rows(nodes), columns=["id", "region", "x", "y"])


class ResultWriter:
    """Writes an experiment's result files into one output directory."""

    def __init__(self, output_dir: Union[str, Path] = "results"):
        """Initialize the writer.

        Args:
            output_dir: Directory to store result files
        """
        self.output_dir = Path(output_dir)

    def ensure_writable(self) -> None:
        """Create the output directory and prove it accepts files.

        Raises:
            OutputError: If the directory cannot be created or written to
        """
        try:
            self.output_dir.mkdir(parents=True, exist_ok=True)
            with tempfile.NamedTemporaryFile(dir=self.output_dir, prefix=".write-check"):
                pass
        except OSError as e:
            raise OutputError(f"Output directory {self.output_dir} is not writable: {e}") from e

    def write_rounds(self, metrics: AggregateMetrics) -> Path:
        path = self.output_dir / f"{metrics.kind.value}_rounds.csv"
        return write_csv(round_frame(metrics), path)

    def write_summary(self, report: ComparisonReport) -> Path:
        rows = [
            {
                "protocol": kind.value,
                "stability_mean": s.stability_mean,
                "lifetime_mean": s.lifetime_mean,
                "total_packets_mean": s.total_packets_mean,
                "unstable_mean": s.unstable_mean,
                "stability_std": s.stability_std,
                "lifetime_std": s.lifetime_std,
                "total_packets_std": s.total_packets_std,
                "runs": s.runs,
                "truncated_runs": s.truncated_runs,
            }
            for kind, s in report.summaries.items()
        ]
        return write_csv(pd.DataFrame(rows, columns=SUMMARY_COLUMNS), self.output_dir / "summary.csv")

    def write_plot_data(self, metrics: Mapping[StrategyKind, AggregateMetrics]) -> List[Path]:
        return [
            emit_plot_data(metrics, self.output_dir / name, attribute)
            for name, attribute in PLOT_TABLES.items()
        ]

    def write_json(self, name: str, data: Any) -> Path:
        path = self.output_dir / name
        _write_text(path, json.dumps(data, indent=2, sort_keys=True) + "\n")
        return path

    def write_config_echo(self, echo: Dict[str, Any]) -> Path:
        return self.write_json("resolved_config.json", echo)

    def write_report(self, report: ComparisonReport) -> Path:
        return self.write_json("report.json", report.model_dump(mode="json"))

    def write_all(
        self,
        metrics: Mapping[StrategyKind, AggregateMetrics],
        report: ComparisonReport,
        echo: Optional[Dict[str, Any]] = None,
    ) -> List[Path]:
        """Write every experiment output in a fixed order."""
        paths = [self.write_rounds(metrics[kind]) for kind in metrics]
        paths.append(self.write_summary(report))
        paths.extend(self.write_plot_data(metrics))
        paths.append(self.write_report(report))
        if echo is not None:
            paths.append(self.write_config_echo(echo))

        logger.info("Results written", output_dir=str(self.output_dir), files=len(paths))
        return paths
