"""Vertex-Vertex (classic lights-out, closed-neighbourhood rule) and Edge-Edge.

Vertex-Vertex is the GF(2) system (A + I)·x = 1, which is always
consistent on a simple graph.  Edge-Edge is Vertex-Vertex on the line
graph, mapped back through the edge bijection.

The minimisation variants enumerate the affine solution space and are
exact only while the nullity stays under ``nullity_cap``.  Minimum
Edge-Edge has no known efficient algorithm; ``min_ee`` is experimental.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .gf2_linalg import (
    DEFAULT_NULLITY_CAP,
    Gf2Solution,
    closed_neighborhood_matrix,
    min_weight_solution,
    solve,
    support,
)
from .graph_core import EdgeSet, Graph, VertexSet, line_graph


class InconsistentSystemError(RuntimeError):
    """The all-ones system had no solution; impossible on a simple graph."""


def vv_system(g: Graph) -> Gf2Solution:
    sol = solve(closed_neighborhood_matrix(g), (1 << g.n) - 1)
    if not sol.consistent:
        raise InconsistentSystemError(f"all-ones system inconsistent on {g!r}")
    return sol


def solve_vv(g: Graph) -> VertexSet:
    return frozenset(support(vv_system(g).particular))


def min_vv(g: Graph, nullity_cap: int = DEFAULT_NULLITY_CAP) -> Optional[VertexSet]:
    x = min_weight_solution(vv_system(g), nullity_cap)
    return None if x is None else frozenset(support(x))


def verify_vv(g: Graph, x: Iterable[int]) -> bool:
    xs = set(x)
    if any(not 0 <= v < g.n for v in xs):
        return False
    for v in range(g.n):
        hits = (v in xs) + sum(1 for u in g.adj[v] if u in xs)
        if hits % 2 == 0:
            return False
    return True


def _to_edges(lg_map: tuple[int, ...], verts: Iterable[int]) -> EdgeSet:
    return frozenset(lg_map[v] for v in verts)


def solve_ee(g: Graph) -> EdgeSet:
    lg, lg_map = line_graph(g)
    return _to_edges(lg_map, solve_vv(lg))


def min_ee(g: Graph, nullity_cap: int = DEFAULT_NULLITY_CAP) -> Optional[EdgeSet]:
    lg, lg_map = line_graph(g)
    x = min_vv(lg, nullity_cap)
    return None if x is None else _to_edges(lg_map, x)


def verify_ee(g: Graph, f: Iterable[int]) -> bool:
    """Check the Edge-Edge condition on g itself, without the line graph.

    Edges outside F need an odd number of adjacent F-edges; edges in F need
    an even number.
    """
    fs = set(f)
    if any(not 0 <= e < g.m for e in fs):
        return False
    for e, (u, v) in enumerate(g.edges):
        adjacent = 0
        for x in fs:
            if x == e:
                continue
            a, b = g.edges[x]
            if a in (u, v) or b in (u, v):
                adjacent += 1
        if (adjacent % 2 == 0) != (e in fs):
            return False
    return True
