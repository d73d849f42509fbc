"""
Master-seed fan-out.

A run is driven by one integer master seed. Every consumer of randomness asks
for a stream by label path, e.g. ``make_rng(7, "seed", 3, "explore")``. The
labels are hashed (CRC-32 for strings, identity for non-negative integers) into
the ``spawn_key`` of a ``numpy.random.SeedSequence`` rooted at the master seed,
so streams with different label paths are statistically independent and the
same label path always reproduces the same stream.
"""
import zlib
from typing import Tuple, Union

import numpy as np

Label = Union[str, int]


def _label_key(label: Label) -> int:
    if isinstance(label, int) and label >= 0:
        return label
    return zlib.crc32(str(label).encode("utf-8"))


def seed_sequence(master_seed: int, *labels: Label) -> np.random.SeedSequence:
    """
    Build the seed sequence for a labelled sub-stream of a master seed.

    Args:
        master_seed (int): The run's master seed.
        *labels: Stream label path.

    Returns:
        np.random.SeedSequence: Deterministic, independent sub-stream seed.
    """
    key: Tuple[int, ...] = tuple(_label_key(label) for label in labels)
    return np.random.SeedSequence(entropy=master_seed, spawn_key=key)


def make_rng(master_seed: int, *labels: Label) -> np.random.Generator:
    """Generator for the labelled sub-stream of ``master_seed``."""
    return np.random.default_rng(seed_sequence(master_seed, *labels))


def child_seed(rng: np.random.Generator) -> int:
    """Draw a fresh 63-bit integer seed from a running generator."""
    return int(rng.integers(0, 2**63 - 1))
