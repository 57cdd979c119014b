"""clustersim - deterministic round-based simulator for cluster routing in sensor networks."""

__version__ = "0.1.0"
__author__ = "CodeByMAB"
__email__ = "mabcode@protonmail.com"

from .config import Config, ExperimentConfig, load_config
from .logging import setup_logging

__all__ = ["Config", "ExperimentConfig", "load_config", "setup_logging"]
