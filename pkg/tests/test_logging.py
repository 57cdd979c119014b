"""Tests for structured logging setup."""

import json
import logging
import os
import shutil
import tempfile
from pathlib import Path

from clustersim.logging import get_logger, setup_logging


class TestSetupLogging:
    """Test the structlog configuration."""

    def setup_method(self):
        """Set up test fixtures."""
        self.test_dir = tempfile.mkdtemp(prefix="clustersim_logging_")
        self.root_level = logging.getLogger().level
        self.handlers = list(logging.getLogger().handlers)

    def teardown_method(self):
        """Clean up test fixtures."""
        root = logging.getLogger()
        for handler in list(root.handlers):
            if handler not in self.handlers:
                root.removeHandler(handler)
                handler.close()
        root.setLevel(self.root_level)
        if os.path.exists(self.test_dir):
            shutil.rmtree(self.test_dir)

    def test_json_lines_to_file(self):
        log_file = Path(self.test_dir) / "logs" / "run.log"
        setup_logging(log_level="INFO", log_file=str(log_file))
        get_logger("clustersim.tests.json").info("Run complete", seed=3, lifetime=812)

        record = json.loads(log_file.read_text().strip().splitlines()[-1])
        assert record["event"] == "Run complete"
        assert record["seed"] == 3
        assert record["level"] == "info"
        assert record["logger"] == "clustersim.tests.json"
        assert "timestamp" in record

    def test_level_filter(self):
        log_file = Path(self.test_dir) / "run.log"
        setup_logging(log_level="WARNING", log_file=str(log_file))
        logger = get_logger("clustersim.tests.level")
        logger.info("Run started")
        logger.warning("Run truncated with nodes alive", alive=4)

        lines = log_file.read_text().strip().splitlines()
        assert len(lines) == 1
        assert json.loads(lines[0])["event"] == "Run truncated with nodes alive"

    def test_console_renderer(self):
        log_file = Path(self.test_dir) / "run.log"
        setup_logging(log_level="INFO", log_file=str(log_file), json_logs=False)
        get_logger("clustersim.tests.console").info("Run complete", seed=5)

        line = log_file.read_text().strip().splitlines()[-1]
        assert "Run complete" in line
        assert "seed=5" in line
