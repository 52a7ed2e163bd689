"""Shared fixtures, hypothesis strategies, and naive reference oracles.

The oracles here use plain Python sets and follow the definitions word for
word; they share no code with the bitmask paths they check.
"""

from itertools import combinations

import pytest
from hypothesis import strategies as st

from zeroforce.graph import Graph, VertexSet


def complete(n):
    return Graph.from_edges(n, combinations(range(n), 2))


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def k2():
    return complete(2)


@pytest.fixture
def k3():
    return complete(3)


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def graph_and_subset(draw, min_n=1, max_n=8):
    g = draw(graphs(min_n, max_n))
    members = draw(st.sets(st.integers(0, g.n - 1))) if g.n else set()
    return g, VertexSet.of(g.n, members)


# naive oracles --------------------------------------------------------------


def naive_forced(g, filled, mode):
    filled = set(filled)
    out = set()
    for u in range(g.n):
        if mode == "standard" and u not in filled:
            continue
        empty_nbrs = [v for v in g.neighbors(u) if v not in filled]
        if len(empty_nbrs) == 1:
            out.add(empty_nbrs[0])
    return out


def naive_closure(g, filled, mode):
    filled = set(filled)
    while True:
        # one vertex at a time, to be independent of the synchronous rounds
        new = naive_forced(g, filled, mode)
        if not new:
            return filled
        filled.add(min(new))


def naive_failed(g, mode):
    """(value, witness) by scanning every subset as a set of ints; value None if undefined."""
    best = None
    verts = range(g.n)
    for size in range(g.n - 1, -1, -1):
        for s in combinations(verts, size):
            if not naive_forced(g, s, mode):
                return size, set(s)
    return best, None


def naive_canonical_complement(g, mode):
    """Lex-first complement among the smallest stalled complements."""
    for size in range(1, g.n + 1):
        for w in combinations(range(g.n), size):
            s = set(range(g.n)) - set(w)
            if not naive_forced(g, s, mode):
                return set(w)
    return None


def naive_mis(g):
    for size in range(g.n, -1, -1):
        for s in combinations(range(g.n), size):
            if all(not g.has_edge(a, b) for a, b in combinations(s, 2)):
                return size
    return 0


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            props = dict(rep.user_properties)
            if "criterion" in props:
                lines.append((props["criterion"], outcome.upper(), props.get("detail", "")))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, outcome, detail in sorted(lines):
            terminalreporter.write_line(f"{outcome:6} {name} {detail}".rstrip())
