import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from chroma.cluster import ColourCluster

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def clusters(draw, ell_min=2, ell_max=6, size_max=4):
    sizes = draw(st.lists(st.integers(1, size_max), min_size=ell_min, max_size=ell_max))
    return ColourCluster(tuple(sizes))


@st.composite
def sorted_clusters(draw, ell_min=2, ell_max=6, size_max=4):
    c = draw(clusters(ell_min, ell_max, size_max))
    return ColourCluster(tuple(sorted(c.sizes, reverse=True)))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: s[5:]):
            terminalreporter.write_line(line)
