import numpy as np
import pytest
from hypothesis import given, settings

from lamplight import oracle
from lamplight.graph_core import Graph, complete, cycle, is_connected, path, star

from conftest import graphs


def test_ev_examples():
    assert oracle.brute_solutions_ev(cycle(4)) == [frozenset({0, 2}), frozenset({1, 3})]
    assert oracle.brute_solutions_ev(path(3)) == []
    assert oracle.brute_solutions_ev(star(4)) == [frozenset({0, 1, 2})]
    assert oracle.min_ev_size(cycle(4)) == 2
    assert oracle.min_ev_size(path(3)) is None


def test_ve_examples():
    assert oracle.brute_solutions_ve(path(3)) == [frozenset({1}), frozenset({0, 2})]
    assert oracle.brute_solutions_ve(cycle(3)) == []


def test_canonical_order():
    masks = oracle.ev_solution_masks(complete(4))
    sets = oracle.to_sets(masks)
    keys = [(len(s), sorted(s)) for s in sets]
    assert keys == sorted(keys)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8))
def test_subset_and_cycle_space_modes_agree(g):
    if g.m > 18:
        return
    a = oracle.ev_solution_masks(g, mode="subset")
    b = oracle.ev_solution_masks(g, mode="gf2")
    assert np.array_equal(a, b)
    sizes = [bin(int(x)).count("1") for x in a]
    assert oracle.min_ev_size(g) == (min(sizes) if sizes else None)


def test_mode_errors():
    with pytest.raises(ValueError):
        oracle.ev_solution_masks(cycle(4), mode="nope")
    with pytest.raises(oracle.BudgetError):
        oracle.ev_solution_masks(complete(8), mode="gf2", nullity_cap=5)


def test_min_vv_size_examples():
    assert oracle.min_vv_size(cycle(4)) == 4
    assert oracle.min_vv_size(Graph.from_edges(2, [])) == 2


@pytest.mark.parametrize("n", range(1, 9))
def test_connected_counts(n):
    gs = oracle.connected_graphs(n)
    assert len(gs) == oracle.CONNECTED_COUNTS[n]
    assert all(g.n == n and is_connected(g) for g in gs)
    assert len(set(gs)) == len(gs)


def test_connected_counts_known_values():
    assert [oracle.CONNECTED_COUNTS[n] for n in range(1, 9)] == [1, 1, 2, 6, 21, 112, 853, 11117]


@pytest.mark.parametrize("n", range(1, 7))
def test_shipped_corpus_matches_regeneration(n):
    pytest.importorskip("networkx")
    live = oracle.generate_connected_graphs(n)
    assert [oracle._encode(g) for g in live] == [oracle._encode(g) for g in oracle.connected_graphs(n)]


def test_encode_roundtrip():
    for g in (cycle(5), complete(4), star(6), Graph.from_edges(1, [])):
        assert set(oracle._decode(oracle._encode(g)).edges) == set(g.edges)


def test_corpus_bounds():
    with pytest.raises(oracle.BudgetError):
        oracle.connected_graphs(9)
    small = list(oracle.corpus(4))
    assert sum(1 for g in small if is_connected(g)) >= 1 + 1 + 2 + 6
    assert any(not is_connected(g) for g in small)


def test_random_families_deterministic():
    a = list(oracle.random_families(10, 5, seed=3))
    b = list(oracle.random_families(10, 5, seed=3))
    assert a == b
    assert {fam for fam, _ in a} == {"tree", "connected", "disconnected", "bipartite", "clawfree", "regular"}
    assert all(g.n <= 10 for _, g in a)
