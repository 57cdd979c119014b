"""Tests for settings and experiment configuration."""

import json
import os
import shutil
import tempfile
from pathlib import Path

import pytest

from clustersim.config import Config, ExperimentConfig, load_config
from clustersim.exceptions import ConfigurationError
from clustersim.network import SplitAxis
from clustersim.protocols import StrategyKind
from clustersim.radio import LoadModel


class TestExperimentConfig:
    """Test experiment defaults and derived values."""

    def test_reference_defaults(self):
        config = ExperimentConfig()
        assert config.n_total == 100
        assert config.k_opt == 10
        assert config.q_step == 10
        assert config.seeds == [1, 2, 3, 4, 5]
        assert config.protocols == [StrategyKind.LEACH, StrategyKind.LPCH, StrategyKind.UDLPCH]
        assert config.max_rounds == config.radio.lifetime_bound
        assert abs(config.max_rounds - 25001) <= 1
        assert config.load_model == LoadModel.ACTUAL
        assert not config.leach_bs_override
        assert not config.region_restricted_membership

    def test_floor_q_step(self):
        assert ExperimentConfig(k_opt=6).q_step == 16
        assert ExperimentConfig(k_opt=7).q_step == 14

    def test_head_target(self):
        assert ExperimentConfig().head_target == 10
        assert ExperimentConfig(k_opt=6).head_target == 6

    def test_k_opt_range(self):
        for k_opt in [0, 100, 150]:
            with pytest.raises(ValueError):
                ExperimentConfig(k_opt=k_opt)

    def test_k_opt_from_probability(self):
        config = ExperimentConfig(radio={"p_opt": 0.05})
        assert config.k_opt == 5

    def test_explicit_seeds(self):
        config = ExperimentConfig(seeds=[9, 3], seed_count=20)
        assert config.seeds == [9, 3]
        assert config.seed_count == 2

    def test_duplicate_protocols_collapsed(self):
        config = ExperimentConfig(protocols=["udlpch", "leach", "udlpch"])
        assert config.protocols == [StrategyKind.UDLPCH, StrategyKind.LEACH]

    def test_unknown_key(self):
        with pytest.raises(ValueError):
            ExperimentConfig(rounds=10)

    def test_with_overrides(self):
        config = ExperimentConfig(seeds=[4, 5])
        updated = config.with_overrides(seed_count=3, max_rounds=None, output_dir="out")
        assert updated.seeds == [1, 2, 3]
        assert updated.max_rounds == config.max_rounds
        assert updated.output_dir == "out"
        assert config.seeds == [4, 5]

    def test_override_error_keys(self):
        with pytest.raises(ConfigurationError) as exc_info:
            ExperimentConfig().with_overrides(max_rounds=0)
        assert exc_info.value.keys == ["max_rounds"]

    def test_horizon_from_energy_bound(self):
        """Test that the default horizon is the last round any node could reach."""
        config = ExperimentConfig(radio={"e_init": 0.02})
        # 0.02 J at no less than 4000 x 5e-9 J per round
        assert 1001 <= config.max_rounds <= 1002
        assert config.horizon == config.max_rounds
        assert ExperimentConfig(max_rounds=40).horizon == 40

    def test_echo(self):
        echo = ExperimentConfig(k_opt=6).echo()
        assert echo["k_opt"] == 6
        assert echo["derived"]["q_step"] == 16
        assert echo["derived"]["epoch_length"] == 10
        assert echo["derived"]["d_crossover"] == pytest.approx(87.7058, abs=1e-4)
        assert echo["derived"]["lifetime_bound"] == echo["max_rounds"]
        assert echo["field"]["split_axis"] == "vertical"
        json.dumps(echo)


class TestLoadConfig:
    """Test loading experiment documents."""

    def setup_method(self):
        """Set up test fixtures."""
        self.test_dir = tempfile.mkdtemp(prefix="clustersim_config_")

    def teardown_method(self):
        """Clean up test fixtures."""
        if os.path.exists(self.test_dir):
            shutil.rmtree(self.test_dir)

    def write(self, text):
        path = Path(self.test_dir) / "experiment.json"
        path.write_text(text)
        return path

    def test_no_path(self):
        assert load_config() == ExperimentConfig()

    def test_blank_file(self):
        assert load_config(self.write("  \n")) == ExperimentConfig()

    def test_partial_document(self):
        config = load_config(
            self.write(json.dumps({"field": {"split_axis": "horizontal"}, "k_opt": 4}))
        )
        assert config.field.split_axis == SplitAxis.HORIZONTAL
        assert config.q_step == 25
        assert config.radio.e_init == 0.5

    def test_missing_file(self):
        with pytest.raises(ConfigurationError, match="Cannot read"):
            load_config(Path(self.test_dir) / "absent.json")

    def test_invalid_json(self):
        with pytest.raises(ConfigurationError, match="not valid JSON"):
            load_config(self.write("{"))

    def test_not_an_object(self):
        with pytest.raises(ConfigurationError, match="JSON object"):
            load_config(self.write("[1, 2]"))

    def test_unknown_keys_named(self):
        with pytest.raises(ConfigurationError) as exc_info:
            load_config(self.write(json.dumps({"radio": {"e_amp": 1.0}, "rounds": 3})))
        assert "radio.e_amp" in exc_info.value.keys
        assert "rounds" in exc_info.value.keys

    def test_out_of_range_values(self):
        with pytest.raises(ConfigurationError) as exc_info:
            load_config(self.write(json.dumps({"radio": {"p_opt": 1.5}})))
        assert exc_info.value.keys == ["radio.p_opt"]

    def test_k_opt_error_names_key(self):
        with pytest.raises(ConfigurationError) as exc_info:
            load_config(self.write(json.dumps({"k_opt": 100})))
        assert exc_info.value.keys == ["k_opt"]
        assert "<root>" not in str(exc_info.value)

    def test_negative_seed_names_key(self):
        with pytest.raises(ConfigurationError) as exc_info:
            load_config(self.write(json.dumps({"seeds": [3, -1]})))
        assert exc_info.value.keys == ["seeds.1"]

    def test_empty_seed_list_names_key(self):
        with pytest.raises(ConfigurationError) as exc_info:
            load_config(self.write(json.dumps({"seeds": []})))
        assert exc_info.value.keys == ["seeds"]

    def test_empty_protocols_names_key(self):
        with pytest.raises(ConfigurationError) as exc_info:
            load_config(self.write(json.dumps({"protocols": []})))
        assert exc_info.value.keys == ["protocols"]

    def test_load_model(self):
        config = load_config(self.write(json.dumps({"load_model": "expected"})))
        assert config.load_model == LoadModel.EXPECTED

    def test_bundled_experiments(self):
        """Test that the shipped experiment files validate."""
        root = Path(__file__).resolve().parent.parent / "experiments"
        for path in sorted(root.glob("*.json")):
            config = load_config(path)
            assert config.seeds


class TestSettings:
    """Test process-level settings."""

    def test_defaults(self):
        settings = Config(_env_file=None)
        assert settings.log_level == "INFO"
        assert settings.json_logs is True
        assert settings.workers == 1

    def test_environment(self, monkeypatch):
        monkeypatch.setenv("CLUSTERSIM_LOG_LEVEL", "DEBUG")
        monkeypatch.setenv("CLUSTERSIM_WORKERS", "4")
        monkeypatch.setenv("CLUSTERSIM_JSON_LOGS", "false")
        settings = Config(_env_file=None)
        assert settings.log_level == "DEBUG"
        assert settings.workers == 4
        assert settings.json_logs is False
