import itertools
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from serredepth.complex_core import from_facets

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def complexes(draw, n_min=1, n_max=5, pure=False, nonempty=True):
    n = draw(st.integers(n_min, n_max))
    if pure:
        k = draw(st.integers(1, n))
        pool = list(itertools.combinations(range(1, n + 1), k))
    else:
        pool = [c for k in range(1, n + 1) for c in itertools.combinations(range(1, n + 1), k)]
    facets = draw(st.lists(st.sampled_from(pool), min_size=1 if nonempty else 0, max_size=6, unique=True))
    return from_facets(n, facets)


@st.composite
def graphs_st(draw, n_min=2, n_max=6):
    from serredepth.graphs import Graph

    n = draw(st.integers(n_min, n_max))
    pool = list(itertools.combinations(range(1, n + 1), 2))
    edges = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=8, unique=True))
    return Graph.from_edges(n, edges)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in mod.LINES:
            terminalreporter.write_line(line)
