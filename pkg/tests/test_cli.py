"""Tests for the clustersim command line."""

import json
import os
import re
import shutil
import tempfile
from pathlib import Path

from click.testing import CliRunner

from clustersim.cli import main


class TestCli:
    """Test CLI commands end to end."""

    def setup_method(self):
        """Set up test fixtures."""
        self.test_dir = tempfile.mkdtemp(prefix="clustersim_cli_")
        self.runner = CliRunner()
        self.config_path = Path(self.test_dir) / "small.json"
        self.config_path.write_text(
            json.dumps(
                {
                    "field": {"nodes_per_region": 10},
                    "radio": {"e_init": 0.02},
                    "seed_count": 2,
                    "output_dir": str(Path(self.test_dir) / "results"),
                }
            )
        )

    def teardown_method(self):
        """Clean up test fixtures."""
        if os.path.exists(self.test_dir):
            shutil.rmtree(self.test_dir)

    def invoke(self, *args):
        return self.runner.invoke(main, ["--log-level", "WARNING", *args])

    def test_show_config(self):
        result = self.invoke("show-config", "--config", str(self.config_path))
        assert result.exit_code == 0
        assert '"q_step": 10' in result.output
        assert '"seeds": [' in result.output

    def test_show_config_rejects_unknown_key(self):
        self.config_path.write_text(json.dumps({"rounds": 5}))
        result = self.invoke("show-config", "--config", str(self.config_path))
        assert result.exit_code == 1
        assert "Error:" in result.output
        assert "rounds" in result.output

    def test_run(self):
        out = Path(self.test_dir) / "cli_out"
        result = self.invoke(
            "run",
            "--config",
            str(self.config_path),
            "--out",
            str(out),
            "--seed-list",
            "3,4",
            "--protocols",
            "leach,udlpch",
        )
        assert result.exit_code == 0, result.output
        assert "Protocol comparison" in result.output
        assert "udlpch vs leach" in result.output
        assert (out / "leach_rounds.csv").is_file()
        assert (out / "udlpch_rounds.csv").is_file()
        assert not (out / "lpch_rounds.csv").exists()
        report = json.loads((out / "report.json").read_text())
        assert report["seeds"] == [3, 4]

    def test_run_rejects_bad_protocol(self):
        result = self.invoke("run", "--config", str(self.config_path), "--protocols", "heed")
        assert result.exit_code == 1
        assert "Unknown protocol" in result.output

    def test_run_rejects_bad_horizon(self):
        result = self.invoke("run", "--config", str(self.config_path), "--max-rounds", "0")
        assert result.exit_code == 1
        assert "max_rounds" in result.output

    def test_dump_nodes(self):
        result = self.invoke("dump-nodes", "--config", str(self.config_path), "--seed", "3")
        assert result.exit_code == 0
        assert "id,region,x,y" in result.output
        rows = re.findall(r"^(\d+),(R[12]),", result.output, flags=re.MULTILINE)
        assert [int(node_id) for node_id, _ in rows] == list(range(1, 21))
        assert [region for _, region in rows] == ["R1"] * 10 + ["R2"] * 10

    def test_dump_nodes_to_file(self):
        out = Path(self.test_dir) / "roster.csv"
        result = self.invoke(
            "dump-nodes", "--config", str(self.config_path), "--seed", "3", "--out", str(out)
        )
        assert result.exit_code == 0
        assert out.read_text().startswith("id,region,x,y\n")
        assert len(out.read_text().splitlines()) == 21

    def test_trace(self):
        out = Path(self.test_dir) / "trace.csv"
        result = self.invoke(
            "trace",
            "--config",
            str(self.config_path),
            "--protocol",
            "UDLPCH",
            "--max-rounds",
            "2",
            "--out",
            str(out),
        )
        assert result.exit_code == 0, result.output
        lines = out.read_text().splitlines()
        assert lines[0] == "round,node_id,action,energy_after,target"
        assert len(lines) == 1 + 2 * 20
        assert sum(1 for line in lines if ",cluster_head," in line) == 2 * 2

    def test_trace_requires_protocol(self):
        result = self.invoke("trace", "--config", str(self.config_path))
        assert result.exit_code != 0
