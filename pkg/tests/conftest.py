import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from hyperdual.core import Hypergraph, Instance, minimize, vset

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

LETTERS = "abcdef"
IX = {c: k for k, c in enumerate(LETTERS)}


def letters(*words, n=6):
    """Hypergraph over a..f from words like "acd"."""
    return Hypergraph(n, tuple(vset(IX[c] for c in w) for w in words), tuple(LETTERS[:n]))


def lset(word):
    return vset(IX[c] for c in word)


EX_G = ("acd", "aef", "cb", "eb")
EX_H = ("ab", "ce", "cbf", "ebd", "dbf")
GAP_H = ("ab", "ce", "cbf", "ebd")


@pytest.fixture
def dual_pair():
    return Instance(letters(*EX_G), letters(*EX_H))


@pytest.fixture
def gap_pair():
    return Instance(letters(*EX_G), letters(*GAP_H))


@pytest.fixture
def triangle_tail():
    names = ("x1", "x2", "x3", "x4")
    return Hypergraph.from_sets(4, [(0, 1), (1, 2), (0, 2), (2, 3)], names)


@st.composite
def hypergraphs(draw, max_n=8, max_edges=6, allow_empty_edge=False):
    n = draw(st.integers(1, max_n))
    lo = 0 if allow_empty_edge else 1
    edges = draw(st.lists(st.integers(lo, (1 << n) - 1), max_size=max_edges))
    return Hypergraph(n, tuple(edges))


@st.composite
def simple_hypergraphs(draw, max_n=8, max_edges=6):
    g = draw(hypergraphs(max_n, max_edges))
    return minimize(g)


@st.composite
def instances(draw, max_n=8, max_edges=6):
    n = draw(st.integers(1, max_n))
    edge = st.integers(0, (1 << n) - 1)
    g = draw(st.lists(edge, max_size=max_edges))
    h = draw(st.lists(edge, max_size=max_edges))
    return Instance(Hypergraph(n, tuple(g)), Hypergraph(n, tuple(h)))


@pytest.fixture(scope="session")
def corpus():
    from corpus import build_corpus
    return build_corpus()


@pytest.fixture
def rng():
    return random.Random(12345)


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
