"""Seeded random streams for reproducible runs.

A run seed is expanded into two independent child streams: one for node
deployment and one for cluster-head election draws. Protocols that draw
differently therefore still see identical deployments for the same seed.
"""

from typing import Tuple, Union

import numpy as np

DEPLOYMENT_STREAM = 0
ELECTION_STREAM = 1

SeedLike = Union[int, np.random.Generator]


def run_streams(seed: int) -> Tuple[np.random.Generator, np.random.Generator]:
    """Return ``(deployment, election)`` generators for a run seed."""
    children = np.random.SeedSequence(seed).spawn(2)
    return (
        np.random.default_rng(children[DEPLOYMENT_STREAM]),
        np.random.default_rng(children[ELECTION_STREAM]),
    )


def deployment_stream(seed: int) -> np.random.Generator:
    """Return the placement generator of a run seed, shared by every protocol."""
    return run_streams(seed)[DEPLOYMENT_STREAM]


def as_generator(seed: SeedLike) -> np.random.Generator:
    """Accept either a run seed (deployment stream) or a ready generator."""
    if isinstance(seed, np.random.Generator):
        return seed
    return deployment_stream(seed)
