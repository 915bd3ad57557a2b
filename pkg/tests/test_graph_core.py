from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, settings

from lamplight.graph_core import (
    CycleBudgetExceeded,
    DuplicateEdgeError,
    Graph,
    NotConnectedError,
    ParseError,
    SelfLoopError,
    bipartition,
    complete,
    complete_bipartite,
    components,
    cycle,
    degrees_in,
    disjoint_union,
    enumerate_cycles,
    format_graph,
    generate,
    is_claw_free,
    line_graph,
    parse_graph,
    path,
    random_graph,
    random_tree,
    spanning_tree,
    star,
)

from conftest import edge_subsets, graphs


def test_parse_edgelist_p3():
    g = parse_graph("3 2\n0 1\n1 2")
    assert g.n == 3
    assert g.edges == ((0, 1), (1, 2))


def test_parse_dimacs_shifts_to_zero_based():
    g = parse_graph("c a comment\np edge 2 1\ne 1 2", "dimacs")
    assert g.n == 2 and g.edges == ((0, 1),)


def test_parse_accepts_bytes_and_comments():
    g = parse_graph(b"# header follows\n3 1\n# edge\n2 0\n")
    assert g.edges == ((0, 2),)
    assert g.adj[2] == (0,)


def test_duplicate_edge_rejected_with_line():
    with pytest.raises(DuplicateEdgeError) as info:
        parse_graph("2 2\n0 1\n0 1")
    assert info.value.line == 3


def test_reversed_duplicate_rejected():
    with pytest.raises(DuplicateEdgeError):
        parse_graph("2 2\n0 1\n1 0")


def test_self_loop_rejected():
    with pytest.raises(SelfLoopError):
        parse_graph("2 1\n1 1")


@pytest.mark.parametrize(
    "text",
    ["", "3\n0 1", "3 2\n0 1", "3 1\n0 x", "2 1\n0 5", "3 1\n0 1 2"],
)
def test_malformed_edgelist(text):
    with pytest.raises(ParseError):
        parse_graph(text)


def test_dimacs_edge_before_header():
    with pytest.raises(ParseError):
        parse_graph("e 1 2\np edge 2 1", "dimacs")


@pytest.mark.parametrize("fmt", ["edgelist", "dimacs"])
def test_format_round_trip(fmt):
    g = random_graph(9, 0.4, seed=3)
    assert parse_graph(format_graph(g, fmt), fmt) == g


def test_neighbour_order_is_arrival_order():
    g = parse_graph("4 3\n2 0\n0 3\n1 0")
    assert g.adj[0] == (2, 3, 1)
    assert g.edges == ((0, 2), (0, 3), (0, 1))


def test_star_generator():
    g = star(4)
    assert g.m == 3
    assert g.adj[0] == (1, 2, 3)
    assert all(g.adj[v] == (0,) for v in (1, 2, 3))


def test_cycle_generator():
    assert cycle(3).m == 3


def test_random_tree_deterministic():
    assert random_tree(10, seed=7) == random_tree(10, seed=7)
    assert generate("random_tree", 10, seed=7) == random_tree(10, seed=7)


def test_random_tree_is_tree():
    for seed in range(20):
        t = random_tree(12, seed)
        assert t.m == 11 and len(components(t)) == 1


def test_components():
    assert components(path(3)) == [frozenset({0, 1, 2})]
    assert len(components(disjoint_union(complete(2), complete(2)))) == 2
    assert components(Graph.from_edges(3, [])) == [frozenset({0}), frozenset({1}), frozenset({2})]


def test_bipartition_examples():
    assert bipartition(cycle(4)) == [(frozenset({0, 2}), frozenset({1, 3}))]
    assert bipartition(cycle(3)) is None
    assert bipartition(path(3)) == [(frozenset({0, 2}), frozenset({1}))]


def test_spanning_tree_examples():
    t = path(5)
    assert spanning_tree(t) == frozenset(range(4))
    c4 = cycle(4)  # edges 01, 12, 23, 03
    assert spanning_tree(c4) == frozenset({0, 3, 1})
    k4 = complete(4)
    assert {k4.edges[e] for e in spanning_tree(k4)} == {(0, 1), (0, 2), (0, 3)}


def test_spanning_tree_needs_connected():
    with pytest.raises(NotConnectedError):
        spanning_tree(disjoint_union(complete(2), complete(2)))


def test_line_graph_examples():
    lg, _ = line_graph(path(3))
    assert (lg.n, lg.m) == (2, 1)
    lg, _ = line_graph(star(4))
    assert lg == complete(3)
    lg, mp = line_graph(cycle(4))
    assert lg.n == 4 and lg.m == 4 and all(lg.degree(v) == 2 for v in range(4))
    assert sorted(mp) == list(range(4))


def test_claw_free_examples():
    assert not is_claw_free(star(4))
    assert is_claw_free(cycle(6))
    assert is_claw_free(line_graph(random_graph(8, 0.5, seed=1))[0])


def test_cycles_examples():
    assert enumerate_cycles(random_tree(9, seed=2)) == []
    assert enumerate_cycles(cycle(4)) == [frozenset(range(4))]
    k4 = enumerate_cycles(complete(4))
    assert len(k4) == 7
    assert sorted(len(c) for c in k4) == [3, 3, 3, 3, 4, 4, 4]


def test_cycle_budget():
    with pytest.raises(CycleBudgetExceeded):
        enumerate_cycles(complete(6), cap=10)


def test_cycles_max_len():
    assert len(enumerate_cycles(complete(4), max_len=3)) == 4


def test_degrees_in_examples():
    assert degrees_in(complete(2), {0}) == [1, 1]
    assert degrees_in(cycle(4), set()) == [0, 0, 0, 0]
    assert degrees_in(star(4), {0, 1, 2}) == [3, 1, 1, 1]


def _brute_cycles(g):
    """Edge subsets forming one connected 2-regular subgraph."""
    found = set()
    for s in edge_subsets(g):
        if not s:
            continue
        deg = degrees_in(g, s)
        if any(d not in (0, 2) for d in deg):
            continue
        verts = {v for v in range(g.n) if deg[v]}
        sub = Graph.from_edges(g.n, [g.edges[e] for e in s])
        if any(verts <= c for c in components(sub)):
            found.add(s)
    return found


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_cycles_match_brute_force(g):
    if g.m > 14:
        return
    cycles = enumerate_cycles(g)
    assert len(cycles) == len(set(cycles))
    assert set(cycles) == _brute_cycles(g)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8))
def test_structural_invariants(g):
    for u in range(g.n):
        for v in g.adj[u]:
            assert u in g.adj[v]
    assert sum(g.degrees()) == 2 * g.m
    lg, _ = line_graph(g)
    assert lg.n == g.m
    assert lg.m == sum(comb(d, 2) for d in g.degrees())
    if g.m <= 16:
        odd = any(len(c) % 2 for c in enumerate_cycles(g))
        assert (bipartition(g) is None) == odd


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9, connected=True))
def test_spanning_tree_is_spanning_and_acyclic(g):
    t = spanning_tree(g)
    assert len(t) == g.n - 1
    sub = Graph.from_edges(g.n, [g.edges[e] for e in t])
    assert len(components(sub)) == 1


def test_complete_bipartite_shape():
    g = complete_bipartite(2, 3)
    assert g.n == 5 and g.m == 6
    assert bipartition(g) == [(frozenset({0, 1}), frozenset({2, 3, 4}))]
