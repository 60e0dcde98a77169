import pytest
from hypothesis import HealthCheck, settings

from nega3 import load_registry

settings.register_profile(
    "batch",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("batch")


@pytest.fixture(scope="session")
def registry():
    return load_registry()
