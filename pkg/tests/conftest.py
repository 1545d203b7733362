"""Configuration for pytest."""

import numpy as np
import pytest

from pickspace.config.settings import get_settings
from pickspace.core.generators import extreme_opposite_points
from pickspace.models.models import BlaschkeData, PointSet, Tolerances


@pytest.fixture(autouse=True)
def _fresh_settings():
    """Drop the cached settings around every test so env changes take effect."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def rng() -> np.random.Generator:
    """Create a seeded random generator."""
    return np.random.default_rng(20261016)


@pytest.fixture
def tol() -> Tolerances:
    """Create the default tolerances."""
    return Tolerances()


@pytest.fixture
def extreme_set() -> PointSet:
    """Create the three points {(0, 0), (1/2, 0), (0, 1/2)}."""
    return extreme_opposite_points(0.5, 0.5)


@pytest.fixture
def two_point_disk() -> PointSet:
    """Create the disk points {0, 1/2}."""
    return PointSet.from_array(np.array([[0.0], [0.5]]))


@pytest.fixture
def collinear_zeros() -> BlaschkeData:
    """Create the zeros {0, 1/2, -1/2}."""
    return BlaschkeData.from_array(np.array([0.0, 0.5, -0.5]))
