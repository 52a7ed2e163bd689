from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zeroforce.forcing import Mode, closure, forced_vertices, is_forcing_set, is_stalled
from zeroforce.graph import Graph, VertexSet

from .conftest import complete, graph_and_subset, naive_closure, naive_forced, path

A, B, C = 0, 1, 2


def vs(g, *ids):
    return VertexSet.of(g.n, ids)


def test_forced_examples():
    p3 = path(3)
    assert set(forced_vertices(p3, vs(p3, A), Mode.STANDARD)) == naive_forced(p3, {A}, "standard") == {B}
    assert set(forced_vertices(p3, vs(p3), Mode.SKEW)) == naive_forced(p3, set(), "skew") == {B}
    for g in (p3, complete(4), Graph.from_edges(3, [])):
        assert not forced_vertices(g, vs(g), Mode.STANDARD)


def test_closure_examples():
    p3 = path(3)
    assert set(closure(p3, vs(p3, A))) == naive_closure(p3, {A}, "standard") == {A, B, C}
    assert set(closure(p3, vs(p3), Mode.SKEW)) == naive_closure(p3, set(), "skew") == {B}
    for mode in Mode:
        full = VertexSet.full(4)
        assert closure(complete(4), full, mode) == full


def test_closure_empty_universe():
    g = Graph.from_edges(0, [])
    assert closure(g, VertexSet.empty(0)) == VertexSet.empty(0)


def test_is_stalled_examples():
    k3, p3 = complete(3), path(3)
    assert is_stalled(k3, vs(k3, 0))
    assert not is_stalled(p3, vs(p3, A))
    assert is_stalled(p3, vs(p3))


def test_is_forcing_set_examples():
    p3 = path(3)
    assert is_forcing_set(p3, vs(p3, A))
    assert not is_forcing_set(p3, vs(p3, B))
    for mode in Mode:
        assert is_forcing_set(p3, VertexSet.full(3), mode)


def test_universe_mismatch():
    p3 = path(3)
    for fn in (forced_vertices, closure, is_stalled, is_forcing_set):
        with pytest.raises(ValueError):
            fn(p3, VertexSet.empty(4), Mode.STANDARD)


def test_mode_accepts_strings():
    p3 = path(3)
    assert forced_vertices(p3, vs(p3), "skew") == vs(p3, B)


def _all_graphs(n):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for bits in product((0, 1), repeat=len(pairs)):
        yield Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b])


@pytest.mark.parametrize("n", range(1, 6))
def test_stalled_characterization_exhaustive(n):
    # every graph on n <= 5 labelled vertices, every subset, both modes
    for g in _all_graphs(n):
        for bits in range(1 << n):
            s = VertexSet(n, bits)
            for mode in Mode:
                definitional = not naive_forced(g, set(s), mode.value)
                assert is_stalled(g, s, mode) == definitional
                assert (not forced_vertices(g, s, mode)) == definitional


@given(graph_and_subset(max_n=9), st.sampled_from(list(Mode)))
def test_forced_matches_naive(gs, mode):
    g, s = gs
    f = forced_vertices(g, s, mode)
    assert set(f) == naive_forced(g, set(s), mode.value)
    assert not (f & s)


@given(graph_and_subset(max_n=9), st.sampled_from(list(Mode)))
def test_closure_matches_sequential(gs, mode):
    g, s = gs
    assert set(closure(g, s, mode)) == naive_closure(g, set(s), mode.value)


@given(graph_and_subset(max_n=10), st.sampled_from(list(Mode)))
def test_closure_laws(gs, mode):
    g, s = gs
    c = closure(g, s, mode)
    assert s <= c
    assert closure(g, c, mode) == c
    assert is_stalled(g, c, mode)
    assert closure(g, s, Mode.STANDARD) <= closure(g, s, Mode.SKEW)


@given(graph_and_subset(max_n=10), st.data())
def test_closure_monotone(gs, data):
    g, t = gs
    s = VertexSet.of(g.n, data.draw(st.sets(st.sampled_from(sorted(t))) if t else st.just(set())))
    for mode in Mode:
        assert closure(g, s, mode) <= closure(g, t, mode)


@given(graph_and_subset(max_n=10))
def test_skew_stalled_implies_stalled(gs):
    g, s = gs
    if is_stalled(g, s, Mode.SKEW):
        assert is_stalled(g, s, Mode.STANDARD)
