"""Reproducible random streams for signal generation.

Every randomized operation draws from a Philox counter-based generator
keyed by (master seed, stream index), so batch generation can hand one
independent stream to each worker and still reproduce byte-identical
output for a given master seed.
"""

from __future__ import annotations

import numpy as np


def derive_rng(master_seed: int, *stream_index: int) -> np.random.Generator:
    """Generator for stream ``stream_index`` under ``master_seed``."""
    ss = np.random.SeedSequence(int(master_seed), spawn_key=tuple(int(i) for i in stream_index))
    return np.random.Generator(np.random.Philox(ss))
