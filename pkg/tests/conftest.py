import numpy as np
import pytest

from bml import BMLParams, GridSpec


@pytest.fixture
def rng():
    return np.random.default_rng(20250808)


@pytest.fixture(scope="session")
def fast_grid():
    """Coarser grid for unit tests; acceptance tests use the defaults."""
    return GridSpec(radii=tuple(0.99 * k / 6 for k in range(1, 7)), angles=64, boundary_x=64)


@pytest.fixture(scope="session")
def unit_params():
    return BMLParams(1.0, 1.0, 1.0, 0.0)
