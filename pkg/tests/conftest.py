import functools

import networkx as nx
import pytest
from hypothesis import settings, strategies as st

from cnideal import corpus
from cnideal.graph import Graph

settings.register_profile("ci", deadline=None, max_examples=100)
settings.load_profile("ci")


@functools.lru_cache(maxsize=None)
def connected_upto7():
    return tuple(corpus.connected_graphs(7))


@functools.lru_cache(maxsize=None)
def all_upto7():
    return tuple(corpus.atlas_graphs(7))


@functools.lru_cache(maxsize=None)
def all_upto6():
    return tuple(corpus.atlas_graphs(6))


def seven_vertex_graph() -> Graph:
    """Seven vertices v1..v7 stored as 0..6."""
    pairs = [(1, 3), (3, 4), (4, 5), (4, 6), (6, 7), (1, 2), (2, 6), (3, 5)]
    return Graph.from_edges(7, [(a - 1, b - 1) for a, b in pairs], labels=[f"v{i}" for i in range(1, 8)])


@st.composite
def graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    g = Graph.from_edges(n, chosen)
    if connected:
        h = corpus.to_networkx(g)
        comps = [min(c) for c in nx.connected_components(h)]
        g = Graph.from_edges(n, chosen + list(zip(comps, comps[1:])))
    return g


@pytest.fixture
def sample7():
    return seven_vertex_graph()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
