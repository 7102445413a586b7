import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# package samplers are driven by a hypothesis-chosen seed
seeds = st.integers(min_value=0, max_value=2**32 - 1)


def rng_from(seed: int) -> random.Random:
    return random.Random(seed)


@pytest.fixture
def rng():
    return random.Random(12345)
