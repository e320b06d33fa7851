import pytest

from filiform import FirstClassParams
from filiform.scalarfield import SamplerConfig, make_rng

GAUSSIAN = SamplerConfig(gaussian=True)


def first(n, *coords):
    """L(alpha) from (alpha_3, ..., alpha_n, theta) given as ints or strings."""
    return FirstClassParams.from_coords(n, list(coords))


@pytest.fixture
def rng(request):
    # one stream per test, stable across runs and test ordering
    return make_rng(request.node.nodeid)


@pytest.fixture
def example():
    return first(4, 1, 2, 3)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
