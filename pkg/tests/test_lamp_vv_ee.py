import pytest
from hypothesis import given, settings

from lamplight.graph_core import Graph, complete, cycle, line_graph, path, star
from lamplight.lamp_vv_ee import min_ee, min_vv, solve_ee, solve_vv, verify_ee, verify_vv
from lamplight.oracle import brute_solutions_ee, brute_solutions_vv, min_vv_size

from conftest import graphs


def test_vv_examples():
    c4 = cycle(4)
    assert brute_solutions_vv(c4) == [frozenset({0, 1, 2, 3})]
    assert min_vv(c4) == frozenset({0, 1, 2, 3})
    assert min_vv(complete(5)) is not None and len(min_vv(complete(5))) == 1
    assert min_vv(star(5)) == frozenset({0})
    assert min_vv(Graph.from_edges(3, [])) == frozenset({0, 1, 2})


def test_vv_verify():
    assert verify_vv(path(3), {1})
    assert not verify_vv(path(3), {0})
    assert not verify_vv(path(3), {5})


def test_ee_examples():
    assert brute_solutions_ee(complete(2)) == [frozenset({0})]
    assert brute_solutions_ee(path(3)) == [frozenset({0}), frozenset({1})]
    k13 = star(4)
    assert brute_solutions_ee(k13) == [frozenset({0}), frozenset({1}), frozenset({2}), frozenset({0, 1, 2})]
    # ties resolve to the lexicographically smallest 0/1 vector over edge ids
    assert min_ee(k13) == frozenset({2})
    assert verify_ee(k13, {0, 1, 2})
    assert not verify_ee(k13, {0, 1})


def test_min_vv_over_cap_returns_none():
    g = cycle(3)  # closed neighbourhoods all coincide, nullity 2
    assert min_vv(g, nullity_cap=0) is None
    assert len(min_vv(g)) == min_vv_size(g)


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=16))
def test_vv_against_oracle(g):
    x = solve_vv(g)
    assert verify_vv(g, x)
    best = min_vv(g)
    assert verify_vv(g, best)
    assert len(best) == min_vv_size(g)
    if g.n <= 12:
        assert best in brute_solutions_vv(g)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7))
def test_ee_against_oracle(g):
    if g.m > 14:
        return
    sols = brute_solutions_ee(g)
    assert verify_ee(g, solve_ee(g))
    best = min_ee(g)
    assert best in sols and len(best) == len(sols[0])
    for s in sols:
        assert verify_ee(g, s)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8))
def test_ee_is_vv_on_line_graph(g):
    lg, back = line_graph(g)
    inv = {e: i for i, e in enumerate(back)}
    for f in brute_solutions_vv(lg)[:8] if lg.n <= 16 else []:
        assert verify_ee(g, {back[i] for i in f})
    s = solve_ee(g)
    assert verify_vv(lg, {inv[e] for e in s})


@pytest.mark.parametrize("n", [1, 2, 3, 6, 10])
def test_complete_graph_single_press(n):
    assert len(min_vv(complete(n))) == 1
