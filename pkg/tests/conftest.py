import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from opdisk import sampling

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

seeds = st.integers(0, 2**32 - 1)
dims = st.integers(1, 5)
caps = st.floats(0.05, 0.95)


@st.composite
def disk_points(draw, n=None, cap=None):
    n = draw(dims) if n is None else n
    cap = draw(caps) if cap is None else cap
    rng = np.random.default_rng(draw(seeds))
    return sampling.random_disk_point(rng, n, cap)


@st.composite
def disk_pairs(draw, cap=0.9):
    n = draw(dims)
    rng = np.random.default_rng(draw(seeds))
    return (sampling.random_disk_point(rng, n, cap),
            sampling.random_disk_point(rng, n, cap))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def opn(a):
    return float(np.linalg.norm(np.asarray(a), 2))
