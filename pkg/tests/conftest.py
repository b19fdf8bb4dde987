import numpy as np
import pytest
from hypothesis import strategies as st

from sftshadow import EpBiSeq, generate

ACCEPTANCE_LINES = []


def words(alphabet=3, min_size=0, max_size=5):
    return st.lists(st.integers(0, alphabet - 1), min_size=min_size, max_size=max_size).map(tuple)


@st.composite
def points(draw, alphabet=3, max_period=4, max_center=6, radius=6):
    left = draw(words(alphabet, 1, max_period))
    center = draw(words(alphabet, 0, max_center))
    right = draw(words(alphabet, 1, max_period))
    s = draw(st.integers(-radius, radius))
    return EpBiSeq(left, center, right, s)


seeds = st.integers(0, 2**32 - 1)


@pytest.fixture
def x34():
    return generate("pq", 3, 4)


@pytest.fixture
def golden():
    return generate("golden")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
