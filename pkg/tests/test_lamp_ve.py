from __future__ import annotations

from hypothesis import given, settings

from lamplight.graph_core import Graph, bipartition, components, cycle, disjoint_union, path, star
from lamplight.lamp_ve import solve_ve, verify_ve

from conftest import graphs


def _brute(g):
    return {
        frozenset(v for v in range(g.n) if mask >> v & 1)
        for mask in range(1 << g.n)
        if all((mask >> u & 1) != (mask >> v & 1) for u, v in g.edges)
    }


def test_odd_cycle_has_no_solution():
    assert solve_ve(cycle(3)) is None


def test_path():
    res = solve_ve(path(3))
    assert res.pairs == ((frozenset({0, 2}), frozenset({1})),)
    assert res.chosen_min == frozenset({1})
    assert _brute(path(3)) == {frozenset({1}), frozenset({0, 2})}


def test_star():
    res = solve_ve(star(4))
    assert res.chosen_min == frozenset({0})
    assert _brute(star(4)) == {frozenset({0}), frozenset({1, 2, 3})}


def test_tie_goes_to_root_side():
    res = solve_ve(cycle(4))
    assert res.chosen_min == frozenset({0, 2})


def test_verify_examples():
    assert verify_ve(path(3), {1})
    assert not verify_ve(path(3), {0, 1})
    assert not verify_ve(path(3), set())
    assert verify_ve(Graph.from_edges(2, []), set())


def test_empty_graph_is_degenerate():
    res = solve_ve(Graph.from_edges(3, []))
    assert res.degenerate
    assert res.chosen_min == frozenset()


def test_disconnected_composes_minima():
    g = disjoint_union(star(4), path(2), path(5))
    res = solve_ve(g)
    assert len(res.pairs) == 3
    assert res.size == 1 + 1 + 2
    assert verify_ve(g, res.chosen_min)


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=10))
def test_against_exhaustive_enumeration(g):
    res = solve_ve(g)
    brute = _brute(g)
    if res is None:
        assert not brute
        assert bipartition(g) is None
        return
    for u, v in res.pairs:
        if g.m:
            assert verify_ve(g, u | (res.chosen_min - u - v))
    assert verify_ve(g, res.chosen_min)
    assert res.size == sum(min(len(u), len(v)) for u, v in res.pairs)
    assert min(len(s) for s in brute) == res.size
    if len(components(g)) == 1 and g.m:
        assert brute == {res.pairs[0][0], res.pairs[0][1]}
