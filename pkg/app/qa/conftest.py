import numpy as np
import pytest

from app.core import component_cache
from app.crystals import fast_rule
from app.observability import events
from app.policies.genericity import GenericitySampler
from app.types.metrics import METRICS
from app.types.weights import RootDatum


@pytest.fixture
def sampler() -> GenericitySampler:
    return GenericitySampler.create(seed=0)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def a2() -> RootDatum:
    return RootDatum.type_a(2)


@pytest.fixture
def a3() -> RootDatum:
    return RootDatum.type_a(3)


@pytest.fixture
def fresh_cache():
    """Empty component cache and zeroed counters for the duration of a test."""
    component_cache.clear()
    METRICS.reset()
    yield
    component_cache.clear()
    METRICS.reset()


@pytest.fixture(autouse=True)
def quiet_events():
    events.set_enabled(False)
    yield
    events.set_enabled(False)


@pytest.fixture
def uncalibrated():
    fast_rule.reset_calibration()
    yield
    fast_rule.reset_calibration()
