"""Vertex-Edge problem: press vertex buttons so every edge lamp ends up on.

An edge is lit iff exactly one of its endpoints is pressed, so the pressed
set is one side of a bipartition.  A connected bipartite graph therefore has
exactly two solutions, and a graph with an odd cycle has none.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .gf2_linalg import incidence_matrix
from .graph_core import Graph, VertexSet, bipartition


@dataclass(frozen=True)
class VeSolutions:
    """Both solutions of every component plus the composed minimum.

    ``pairs[k]`` is ``(U, V)`` for component ``k`` with the BFS root in U.
    A disconnected graph has ``2 ** len(pairs)`` solutions in total; only
    the per-component pairs are stored.
    """

    pairs: tuple[tuple[VertexSet, VertexSet], ...]
    chosen_min: VertexSet
    degenerate: bool = False

    @property
    def size(self) -> int:
        return len(self.chosen_min)


def solve_ve(g: Graph) -> Optional[VeSolutions]:
    parts = bipartition(g)
    if parts is None:
        return None
    chosen: set[int] = set()
    for u_side, v_side in parts:
        # ties go to U, the side holding the BFS root
        chosen |= v_side if len(v_side) < len(u_side) else u_side
    return VeSolutions(tuple(parts), frozenset(chosen), degenerate=g.m == 0)


def verify_ve(g: Graph, x: Iterable[int]) -> bool:
    """True iff every edge has exactly one endpoint in x.

    Counted through the incidence matrix columns over the integers, so an
    edge with both endpoints pressed counts 2 and fails.
    """
    xs = set(x)
    if any(not 0 <= v < g.n for v in xs):
        return False
    inc = incidence_matrix(g).bits
    hits = [0] * g.m
    for v in xs:
        row = inc[v]
        while row:
            low = row & -row
            hits[low.bit_length() - 1] += 1
            row ^= low
    return all(h == 1 for h in hits)
