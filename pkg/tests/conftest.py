import numpy as np
import pytest

from sigtext.signalio import SampleGrid


@pytest.fixture
def grid_1k() -> SampleGrid:
    """1 kHz, 1 s: the Example-A fixture grid."""
    return SampleGrid(1000.0, 1000)


@pytest.fixture
def grid_10k() -> SampleGrid:
    """10 kHz, 1 s: integer-period grid with 1 Hz bins."""
    return SampleGrid(10000.0, 10000)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240809)
