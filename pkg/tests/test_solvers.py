import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zeroforce.corpus import SplitMix64, gnp, labelled_graphs
from zeroforce.forcing import Mode, closure, is_stalled
from zeroforce.graph import Graph, VertexSet, is_connected
from zeroforce.solvers import (
    BudgetExceeded,
    EmptyGraphError,
    OracleLimitError,
    decide_failed,
    failed_forcing_number,
    failed_forcing_number_bruteforce,
    iter_stalled_complements,
    max_independent_set,
)

from .conftest import complete, cycle, graphs, naive_canonical_complement, naive_failed, naive_mis, path


def test_p3_standard():
    res = failed_forcing_number(path(3), Mode.STANDARD)
    assert (res.value, set(res.witness)) == naive_failed(path(3), "standard") == (1, {1})


def test_k1_standard():
    res = failed_forcing_number(complete(1))
    assert res.value == 0 and res.witness == VertexSet.empty(1)


def test_k2_skew_undefined():
    assert naive_failed(complete(2), "skew") == (None, None)
    res = failed_forcing_number(complete(2), Mode.SKEW)
    assert res.value is None and res.witness is None and not res.defined
    assert failed_forcing_number_bruteforce(complete(2), Mode.SKEW).value is None


@pytest.mark.parametrize("n", range(2, 9))
def test_complete_graphs(n):
    assert failed_forcing_number(complete(n)).value == n - 2
    assert failed_forcing_number_bruteforce(complete(n)).value == n - 2


def test_empty_graph_rejected():
    g = Graph.from_edges(0, [])
    for fn in (failed_forcing_number, failed_forcing_number_bruteforce):
        with pytest.raises(EmptyGraphError, match="empty graph has no proper subsets"):
            fn(g)
    with pytest.raises(EmptyGraphError):
        decide_failed(g, 0)


def test_oracle_cap():
    with pytest.raises(OracleLimitError):
        failed_forcing_number_bruteforce(path(6), cap=5)


def test_budget():
    g = path(12)
    checks = failed_forcing_number(g).checks
    with pytest.raises(BudgetExceeded):
        failed_forcing_number(g, budget=checks - 1)
    assert failed_forcing_number(g, budget=checks).value == failed_forcing_number_bruteforce(g).value


@given(graphs(max_n=8), st.sampled_from(list(Mode)))
def test_matches_naive_definition(g, mode):
    res = failed_forcing_number(g, mode)
    value, _ = naive_failed(g, mode.value)
    assert res.value == value
    if value is not None:
        assert len(res.witness) == value
        assert res.witness.is_proper()
        assert is_stalled(g, res.witness, mode)


@given(graphs(max_n=8), st.sampled_from(list(Mode)))
def test_witness_is_canonical(g, mode):
    res = failed_forcing_number(g, mode)
    w = naive_canonical_complement(g, mode.value)
    assert (None if res.witness is None else set(~res.witness)) == w


@pytest.mark.parametrize("n", range(1, 6))
def test_oracle_equivalence_all_connected(n):
    for g in labelled_graphs(n, connected_only=True):
        for mode in Mode:
            assert failed_forcing_number(g, mode).value == failed_forcing_number_bruteforce(g, mode).value


def test_oracle_witness_is_stalled():
    rng = SplitMix64(11)
    for _ in range(30):
        g = gnp(7, 0.4, rng)
        for mode in Mode:
            res = failed_forcing_number_bruteforce(g, mode)
            if res.defined:
                assert is_stalled(g, res.witness, mode) and res.witness.is_proper()


@given(graphs(min_n=2, max_n=9))
def test_connected_upper_bound(g):
    if is_connected(g):
        assert failed_forcing_number(g).value <= g.n - 2


@given(graphs(max_n=8), st.data())
@settings(max_examples=60)
def test_non_forcing_is_downward_closed(g, data):
    bits = data.draw(st.integers(0, (1 << g.n) - 1))
    s = VertexSet(g.n, bits)
    sub = VertexSet(g.n, bits & data.draw(st.integers(0, (1 << g.n) - 1)))
    for mode in Mode:
        if closure(g, s, mode).bits != g.full_mask:
            assert closure(g, sub, mode).bits != g.full_mask


def test_decide_examples():
    p3 = path(3)
    assert decide_failed(p3, 1)
    assert not decide_failed(p3, 2)
    assert not decide_failed(p3, 3)
    for g in (complete(1), path(4), cycle(5)):
        assert decide_failed(g, 0)
    with pytest.raises(ValueError):
        decide_failed(p3, -1)


@given(graphs(max_n=8), st.integers(0, 9), st.sampled_from(list(Mode)))
def test_decide_matches_value(g, s, mode):
    value = failed_forcing_number(g, mode).value
    assert decide_failed(g, s, mode) == (value is not None and value >= s)


def test_iter_stalled_complements_order():
    g = cycle(5)
    sets = list(iter_stalled_complements(g))
    sizes = [g.n - len(s) for s in sets]
    assert sizes == sorted(sizes)
    assert all(is_stalled(g, s) and s.is_proper() for s in sets)
    naive = sum(1 for bits in range((1 << 5) - 1) if is_stalled(g, VertexSet(5, bits)))
    assert len(sets) == naive


def test_parallel_search_matches_serial():
    rng = SplitMix64(5)
    for _ in range(5):
        g = gnp(9, 0.35, rng)
        for mode in Mode:
            a = failed_forcing_number(g, mode)
            b = failed_forcing_number(g, mode, workers=3)
            assert (a.value, a.witness) == (b.value, b.witness)


def test_mis_examples():
    assert max_independent_set(complete(3)).k == 1
    res = max_independent_set(path(3))
    assert res.k == 2 and set(res.witness) == {0, 2}
    assert max_independent_set(cycle(5)).k == naive_mis(cycle(5)) == 2
    empty = max_independent_set(Graph.from_edges(0, []))
    assert empty.k == 0 and not empty.witness


@given(graphs(min_n=0, max_n=12))
def test_mis_matches_brute_force(g):
    res = max_independent_set(g)
    assert res.k == naive_mis(g)
    assert len(res.witness) == res.k
    assert g.is_independent(res.witness)


def test_mis_larger_graph():
    nx = pytest.importorskip("networkx")
    rng = SplitMix64(99)
    for n, p in ((30, 0.3), (40, 0.2), (45, 0.5)):
        g = gnp(n, p, rng)
        res = max_independent_set(g)
        assert g.is_independent(res.witness) and len(res.witness) == res.k
        h = nx.complement(nx.Graph(g.edges()))
        h.add_nodes_from(range(n))
        _, weight = nx.max_weight_clique(h, weight=None)
        assert res.k == weight
