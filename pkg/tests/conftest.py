from __future__ import annotations

from hypothesis import strategies as st

from lamplight.graph_core import Graph


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, connected: bool = False):
    """Small simple graphs; with ``connected`` a random tree is laid down first."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = set()
    if connected:
        for v in range(1, n):
            chosen.add((draw(st.integers(0, v - 1)), v))
    extra = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    chosen.update(extra)
    order = draw(st.permutations(sorted(chosen))) if chosen else []
    return Graph.from_edges(n, order)


def edge_subsets(g: Graph):
    for mask in range(1 << g.m):
        yield frozenset(e for e in range(g.m) if mask >> e & 1)
