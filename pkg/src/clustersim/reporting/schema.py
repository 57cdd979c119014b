"""Comparison report schema definitions."""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from ..protocols.schema import StrategyKind


class ProtocolSummary(BaseModel):
    """Run-level averages of one protocol."""

    kind: StrategyKind
    runs: int
    stability_mean: float
    stability_std: float
    lifetime_mean: float
    lifetime_std: float
    unstable_mean: float
    total_packets_mean: float
    total_packets_std: float
    truncated_runs: int = 0


class PairwiseDelta(BaseModel):
    """How a protocol compares with a baseline over the same seeds."""

    subject: StrategyKind
    baseline: StrategyKind
    stability_pct: float = Field(description="(subject - baseline) / baseline x 100")
    lifetime_pct: float
    throughput_pct: float
    throughput_ratio: float


class ExpectationCheck(BaseModel):
    """A declared ordering expectation and whether the experiment met it."""

    name: str
    description: str
    observed: float
    threshold: float
    passed: bool


class ComparisonReport(BaseModel):
    """Result of an experiment across protocols on paired seeds."""

    seeds: List[int]
    n_total: int
    summaries: Dict[StrategyKind, ProtocolSummary]
    deltas: List[PairwiseDelta] = Field(default_factory=list)
    checks: List[ExpectationCheck] = Field(default_factory=list)

    def delta(
        self, subject: StrategyKind, baseline: StrategyKind
    ) -> Optional[PairwiseDelta]:
        for delta in self.deltas:
            if delta.subject == subject and delta.baseline == baseline:
                return delta
        return None

    @property
    def all_passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def render(self) -> str:
        """Plain-text report for the terminal."""
        lines = [
            "Protocol comparison",
            "===================",
            f"Nodes: {self.n_total}   Seeds: {len(self.seeds)} ({', '.join(str(s) for s in self.seeds)})",
            "",
            f"{'protocol':<10}{'stability':>14}{'lifetime':>14}{'unstable':>12}{'packets':>16}{'trunc':>7}",
        ]
        for kind, summary in self.summaries.items():
            lines.append(
                f"{kind.value:<10}"
                f"{summary.stability_mean:>9.1f} ±{summary.stability_std:<4.0f}"
                f"{summary.lifetime_mean:>9.1f} ±{summary.lifetime_std:<4.0f}"
                f"{summary.unstable_mean:>12.1f}"
                f"{summary.total_packets_mean:>16.1f}"
                f"{summary.truncated_runs:>7d}"
            )

        if self.deltas:
            lines += ["", "Pairwise deltas"]
            for delta in self.deltas:
                lines.append(
                    f"  {delta.subject.value} vs {delta.baseline.value}: "
                    f"stability {delta.stability_pct:+.1f}%, "
                    f"lifetime {delta.lifetime_pct:+.1f}%, "
                    f"throughput {delta.throughput_pct:+.1f}% "
                    f"(x{delta.throughput_ratio:.2f})"
                )

        if self.checks:
            lines += ["", "Expectations"]
            for check in self.checks:
                mark = "PASS" if check.passed else "FAIL"
                lines.append(
                    f"  [{mark}] {check.description}: observed {check.observed:.3f}, "
                    f"required >= {check.threshold:.3f}"
                )
        return "\n".join(lines)
