import sys

import pytest
from hypothesis import settings, strategies as st

from convdecomp.oracle import GenConfig, gen_decomposition
from convdecomp.samples import blocked_quad, square_fan, unit_square

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture
def s1():
    return unit_square()


@pytest.fixture
def s2():
    return square_fan()


@pytest.fixture
def s3():
    return blocked_quad()


@st.composite
def decompositions(draw, min_n=4, max_n=14):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    p = draw(st.sampled_from([0.0, 0.3, 0.7, 1.0]))
    return gen_decomposition(GenConfig(n=n, range=200, seed=seed, delete_prob=p))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS):
        terminalreporter.write_line(line)
