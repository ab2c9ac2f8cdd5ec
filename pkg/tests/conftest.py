import numpy as np
import pytest
from hypothesis import strategies as st

from mobility import MovementProfile

ORIGIN = (10.0, 20.0, 40.0)
SCENARIOS = {
    "1a": (20.0, 40.0, 80.0),
    "1b": (15.0, 25.0, 45.0),
    "1c": (20.0, 40.0, 10.0),
    "1d": (40.0, 80.0, 20.0),
    "1e": (25.0, 45.0, 15.0),
    "1f": (10.0, 30.0, 40.0),
    "1g": (10.0, 40.0, 160.0),
}


def scenario(label):
    return MovementProfile(ORIGIN, SCENARIOS[label])


@pytest.fixture
def profiles_t2():
    return {k: scenario(k) for k in SCENARIOS}


status = st.floats(min_value=1.0, max_value=100.0, allow_nan=False, allow_infinity=False)


@st.composite
def positive_profiles(draw, min_n=2, max_n=12):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    u = draw(st.lists(status, min_size=n, max_size=n))
    v = draw(st.lists(status, min_size=n, max_size=n))
    return MovementProfile(u, v)


def random_profiles(count, seed, n_max=12, low=1.0, high=100.0):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(2, n_max + 1))
        out.append(MovementProfile(rng.uniform(low, high, n), rng.uniform(low, high, n)))
    return out


# acceptance lines are collected by tests/test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[key])
