"""Tests for seeded random streams."""

import numpy as np

from clustersim.network import FieldConfig, deploy
from clustersim.rng import as_generator, deployment_stream, run_streams


class TestRunStreams:
    """Test stream derivation from a run seed."""

    def test_reproducible(self):
        first = [stream.random(4).tolist() for stream in run_streams(11)]
        second = [stream.random(4).tolist() for stream in run_streams(11)]
        assert first == second

    def test_streams_independent(self):
        deployment, election = run_streams(11)
        assert deployment.random(4).tolist() != election.random(4).tolist()

    def test_seeds_differ(self):
        first = deployment_stream(1).random(4).tolist()
        assert first != deployment_stream(2).random(4).tolist()

    def test_deployment_stream_matches_run_streams(self):
        deployment, _ = run_streams(8)
        assert deployment_stream(8).random(6).tolist() == deployment.random(6).tolist()

    def test_as_generator(self):
        rng = np.random.default_rng(3)
        assert as_generator(rng) is rng
        assert as_generator(8).random(3).tolist() == deployment_stream(8).random(3).tolist()

    def test_deploy_from_seed_uses_deployment_stream(self):
        """Test that a seed and its deployment stream place the same field."""
        field = FieldConfig(nodes_per_region=5)
        from_seed = [node.position for node in deploy(field, 4, 0.5)]
        from_stream = [node.position for node in deploy(field, deployment_stream(4), 0.5)]
        assert from_seed == from_stream
