"""Tests for the experiment grid and the comparison report."""

import json
import os
import shutil
import tempfile
from pathlib import Path

import pytest

from clustersim.config import ExperimentConfig
from clustersim.engine import RoundRecord, RunSeries, aggregate
from clustersim.exceptions import OutputError
from clustersim.network import FieldConfig
from clustersim.protocols import StrategyKind
from clustersim.reporting.experiment import compare, run_experiment, run_grid

RESULT_FILES = [
    "leach_rounds.csv",
    "lpch_rounds.csv",
    "udlpch_rounds.csv",
    "summary.csv",
    "dead_nodes.csv",
    "alive_nodes.csv",
    "throughput.csv",
    "report.json",
]


def synthetic_metrics(kind, stability, lifetime, packets):
    series = RunSeries(
        kind=kind,
        seed=1,
        records=[
            RoundRecord(
                round=0,
                dead=0,
                alive=100,
                packets_to_bs=10,
                ch_count_r1=5,
                ch_count_r2=5,
                energy_total=50.0,
            )
        ],
        stability_period=stability,
        lifetime=lifetime,
        total_packets=packets,
    )
    return aggregate([series])


class TestCompare:
    """Test pairwise deltas and ordering checks."""

    def setup_method(self):
        """Set up test fixtures."""
        self.metrics = {
            StrategyKind.LEACH: synthetic_metrics(StrategyKind.LEACH, 100, 200, 1000),
            StrategyKind.LPCH: synthetic_metrics(StrategyKind.LPCH, 110, 210, 2500),
            StrategyKind.UDLPCH: synthetic_metrics(StrategyKind.UDLPCH, 112, 220, 2400),
        }
        self.report = compare(self.metrics, [1])

    def test_deltas(self):
        delta = self.report.delta(StrategyKind.LPCH, StrategyKind.LEACH)
        assert delta.stability_pct == pytest.approx(10.0)
        assert delta.lifetime_pct == pytest.approx(5.0)
        assert delta.throughput_pct == pytest.approx(150.0)
        assert delta.throughput_ratio == pytest.approx(2.5)
        assert self.report.delta(StrategyKind.LEACH, StrategyKind.LPCH) is None
        assert len(self.report.deltas) == 3

    def test_checks(self):
        passed = {check.name: check.passed for check in self.report.checks}
        assert passed == {
            "lpch_stability": True,
            "udlpch_stability": False,
            "lpch_throughput": True,
            "udlpch_throughput": False,
        }
        assert not self.report.all_passed

    def test_render(self):
        text = self.report.render()
        assert "udlpch vs lpch" in text
        assert "[PASS] lpch/leach stability period" in text
        assert "[FAIL] udlpch/lpch total packets" in text

    def test_partial_protocols(self):
        """Test that pairs with a missing protocol are skipped."""
        report = compare(
            {
                StrategyKind.LEACH: self.metrics[StrategyKind.LEACH],
                StrategyKind.UDLPCH: self.metrics[StrategyKind.UDLPCH],
            },
            [1],
        )
        assert [(d.subject, d.baseline) for d in report.deltas] == [
            (StrategyKind.UDLPCH, StrategyKind.LEACH)
        ]
        assert report.checks == []
        assert report.all_passed

    def test_zero_baseline(self):
        report = compare(
            {
                StrategyKind.LEACH: synthetic_metrics(StrategyKind.LEACH, 0, 10, 100),
                StrategyKind.LPCH: synthetic_metrics(StrategyKind.LPCH, 5, 10, 100),
            },
            [1],
        )
        delta = report.delta(StrategyKind.LPCH, StrategyKind.LEACH)
        assert delta.stability_pct == float("inf")
        assert delta.lifetime_pct == 0.0


class TestRunExperiment:
    """Test whole experiments on a small network."""

    def setup_method(self):
        """Set up test fixtures."""
        self.test_dir = tempfile.mkdtemp(prefix="clustersim_experiment_")
        self.config = ExperimentConfig(
            field=FieldConfig(nodes_per_region=10),
            radio={"e_init": 0.02},
            seeds=[1, 2],
            output_dir=os.path.join(self.test_dir, "first"),
        )

    def teardown_method(self):
        """Clean up test fixtures."""
        if os.path.exists(self.test_dir):
            shutil.rmtree(self.test_dir)

    def read_results(self, output_dir):
        return {name: (Path(output_dir) / name).read_bytes() for name in RESULT_FILES}

    def test_outputs(self):
        report, metrics = run_experiment(self.config)
        out = Path(self.config.output_dir)
        for name in RESULT_FILES + ["resolved_config.json"]:
            assert (out / name).is_file()

        assert set(metrics) == set(StrategyKind)
        assert len(report.checks) == 4
        assert report.seeds == [1, 2]
        assert report.n_total == 20

        rounds = (out / "lpch_rounds.csv").read_text().splitlines()
        assert len(rounds) == len(metrics[StrategyKind.LPCH].round) + 1

        echo = json.loads((out / "resolved_config.json").read_text())
        assert echo["seeds"] == [1, 2]
        assert echo["derived"]["q_step"] == 10

    def test_grid_pairs_seeds(self):
        grouped = run_grid(self.config)
        for kind, series_list in grouped.items():
            assert [series.seed for series in series_list] == [1, 2]
            assert all(series.kind == kind for series in series_list)

    def test_reproducible(self):
        """Test that two runs of one config give byte-identical results."""
        run_experiment(self.config)
        second = self.config.with_overrides(output_dir=os.path.join(self.test_dir, "second"))
        run_experiment(second)
        assert self.read_results(self.config.output_dir) == self.read_results(second.output_dir)

    def test_parallel_matches_serial(self):
        run_experiment(self.config)
        parallel = self.config.with_overrides(
            output_dir=os.path.join(self.test_dir, "parallel"), workers=2
        )
        run_experiment(parallel)
        assert self.read_results(self.config.output_dir) == self.read_results(parallel.output_dir)

    def test_unwritable_output(self):
        blocker = Path(self.test_dir) / "blocker"
        blocker.write_text("")
        config = self.config.with_overrides(output_dir=str(blocker / "out"))
        with pytest.raises(OutputError):
            run_experiment(config)


@pytest.mark.slow
class TestReferenceExperiment:
    """Full-size 20-seed experiment; run with ``pytest -m slow``."""

    def setup_method(self):
        """Set up test fixtures."""
        self.test_dir = tempfile.mkdtemp(prefix="clustersim_reference_")

    def teardown_method(self):
        """Clean up test fixtures."""
        if os.path.exists(self.test_dir):
            shutil.rmtree(self.test_dir)

    def test_ordering_outcome(self):
        """Test the protocol ordering the energy model produces at full size.

        Rotation beats LEACH on packets at the base station, but under
        member-count head charging the stability order is LEACH > LPCH >
        UDLPCH, and UDLPCH delivers fewer packets than LPCH.
        """
        config = ExperimentConfig(seed_count=20, output_dir=self.test_dir, workers=4)
        report, _ = run_experiment(config)

        assert all(summary.truncated_runs == 0 for summary in report.summaries.values())
        stability = {kind: s.stability_mean for kind, s in report.summaries.items()}
        assert (
            stability[StrategyKind.LEACH]
            > stability[StrategyKind.LPCH]
            > stability[StrategyKind.UDLPCH]
        )
        assert {check.name: check.passed for check in report.checks} == {
            "lpch_stability": False,
            "udlpch_stability": False,
            "lpch_throughput": True,
            "udlpch_throughput": False,
        }
