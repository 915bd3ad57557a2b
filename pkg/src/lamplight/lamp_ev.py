"""Edge-Vertex problem: press edge buttons so every vertex lamp ends up on.

A solution is the edge set of an odd-degree spanning subgraph.  One exists
iff every component has even order.  Any spanning tree yields one in linear
time; the minimum one comes from a minimum-weight perfect matching on a
blown-up gadget graph (see :func:`build_gadget`).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .graph_core import (
    DEFAULT_CYCLE_CAP,
    EdgeSet,
    Graph,
    GraphError,
    NotConnectedError,
    VertexSet,
    components,
    degrees_in,
    enumerate_cycles,
    is_claw_free,
    is_connected,
    is_tree,
    spanning_tree,
)
from .matching import WeightedGraph, has_perfect_matching, min_weight_perfect_matching


class OddOrderError(GraphError):
    pass


class NotATreeError(GraphError):
    pass


class IsolatedVertexError(GraphError):
    pass


class NotClawFreeError(GraphError):
    pass


class InvalidSolutionError(GraphError):
    pass


class ReductionInvariantError(RuntimeError):
    """The gadget graph had no perfect matching although the input has even order."""


@dataclass(frozen=True)
class VertexBlock:
    """Gadget vertices standing in for one original vertex.

    ``clique[j]`` and ``ports[j]`` belong to the j-th neighbour; ``parity`` is
    the extra clique vertex added when the degree is even.
    """

    clique: range
    ports: range
    parity: Optional[int]


@dataclass(frozen=True)
class GadgetGraph:
    star: WeightedGraph
    cross_edges: tuple[int, ...]  # original edge id -> gadget edge id
    rung_edges: frozenset
    blocks: tuple[VertexBlock, ...]

    @property
    def original_of_cross(self) -> dict[int, int]:
        return {ge: e for e, ge in enumerate(self.cross_edges)}

    def cross_map_lines(self) -> str:
        return "".join(f"cross {ge} {e}\n" for e, ge in enumerate(self.cross_edges))


@dataclass(frozen=True)
class EvSolution:
    edges: EdgeSet
    is_optimal: bool
    forest_components: tuple[VertexSet, ...] = ()
    matching_weight: Optional[int] = None

    @property
    def size(self) -> int:
        return len(self.edges)


def has_ev_solution(g: Graph) -> bool:
    return all(len(c) % 2 == 0 for c in components(g))


def verify_ev(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    if any(not 0 <= e < g.m for e in s):
        return False
    return all(d % 2 == 1 for d in degrees_in(g, s))


def _tree_parity(g: Graph, tree: Iterable[int], root: int = 0) -> EdgeSet:
    # leaves upward: a vertex keeps its parent edge iff its child edges leave it even
    allowed = set(tree)
    parent_edge = [-1] * g.n
    seen = [False] * g.n
    seen[root] = True
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v, e in zip(g.adj[u], g.incident[u]):
            if e in allowed and not seen[v]:
                seen[v] = True
                parent_edge[v] = e
                order.append(v)
                queue.append(v)
    deg = [0] * g.n
    chosen = []
    for v in reversed(order[1:]):
        if deg[v] % 2 == 0:
            e = parent_edge[v]
            chosen.append(e)
            deg[v] += 1
            a, b = g.edges[e]
            deg[a if b == v else b] += 1
    if deg[root] % 2 == 0:
        raise OddOrderError("tree has odd order")
    return frozenset(chosen)


def tree_ev_solution(t: Graph) -> EdgeSet:
    """The unique solution on an even-order tree, in one post-order pass."""
    if not is_tree(t):
        raise NotATreeError("input is not a tree")
    if t.n % 2:
        raise OddOrderError(f"tree has odd order {t.n}")
    return _tree_parity(t, range(t.m))


def spanning_tree_ev_solution(g: Graph) -> EvSolution:
    """Solution read off a BFS spanning tree; at most n-1 edges."""
    if g.n % 2:
        raise OddOrderError(f"graph has odd order {g.n}")
    tree = spanning_tree(g)
    return EvSolution(_tree_parity(g, tree), is_optimal=False)


def solve_ev(g: Graph) -> Optional[EvSolution]:
    """Spanning-tree solution assembled component by component."""
    if not has_ev_solution(g):
        return None
    chosen: set[int] = set()
    for comp in components(g):
        root = min(comp)
        tree = _component_tree(g, root)
        chosen |= _tree_parity(g, tree, root)
    return EvSolution(frozenset(chosen), is_optimal=False)


def _component_tree(g: Graph, root: int) -> list[int]:
    seen = {root}
    tree = []
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v, e in zip(g.adj[u], g.incident[u]):
            if v not in seen:
                seen.add(v)
                tree.append(e)
                queue.append(v)
    return tree


def build_gadget(g: Graph) -> GadgetGraph:
    """Weighted gadget graph whose perfect matchings encode solutions.

    For a vertex of degree d: d clique vertices forming K_d (K_{d+1} with an
    extra parity vertex when d is even), d port vertices each tied to its
    clique partner by a weight-1 rung, and for every original edge one
    weight-0 cross edge between the two matching ports.  All other edges
    weigh 0.  A perfect matching must use an odd number of rungs at every
    block; the edges whose cross edge is left unmatched form the solution.
    """
    blocks: list[VertexBlock] = []
    nxt = 0
    for v in range(g.n):
        d = g.degree(v)
        if d == 0:
            raise IsolatedVertexError(f"vertex {v} is isolated")
        clique = range(nxt, nxt + d)
        ports = range(nxt + d, nxt + 2 * d)
        nxt += 2 * d
        parity = None
        if d % 2 == 0:
            parity = nxt
            nxt += 1
        blocks.append(VertexBlock(clique, ports, parity))

    edges: list[tuple[int, int]] = []
    weights: list[int] = []
    rungs = []
    for blk in blocks:
        members = list(blk.clique) + ([blk.parity] if blk.parity is not None else [])
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                edges.append((members[a], members[b]))
                weights.append(0)
        for c, p in zip(blk.clique, blk.ports):
            rungs.append(len(edges))
            edges.append((c, p))
            weights.append(1)

    position = [{u: k for k, u in enumerate(g.adj[v])} for v in range(g.n)]
    cross = []
    for u, v in g.edges:
        cross.append(len(edges))
        edges.append((blocks[u].ports[position[u][v]], blocks[v].ports[position[v][u]]))
        weights.append(0)

    star = WeightedGraph(Graph.from_edges(nxt, edges), tuple(weights))
    return GadgetGraph(star, tuple(cross), frozenset(rungs), tuple(blocks))


def extract_solution(gadget: GadgetGraph, matched: Iterable[int]) -> EdgeSet:
    """Original edges whose cross edge is not in the perfect matching."""
    matched = set(matched)
    return frozenset(e for e, ge in enumerate(gadget.cross_edges) if ge not in matched)


def forest_components(g: Graph, s: Iterable[int]) -> tuple[VertexSet, ...]:
    sub = Graph.from_edges(g.n, [g.edges[e] for e in sorted(set(s))])
    return tuple(components(sub))


def _min_ev_connected(g: Graph, use_tree_shortcut: bool) -> tuple[EdgeSet, Optional[int]]:
    if use_tree_shortcut and g.m == g.n - 1:
        return tree_ev_solution(g), None
    gadget = build_gadget(g)
    # ties among optimal matchings do not matter here
    m = min_weight_perfect_matching(gadget.star, tie_break=False)
    if m is None:
        raise ReductionInvariantError("gadget graph has no perfect matching")
    return extract_solution(gadget, m.edges), m.total_weight


def min_ev(g: Graph, use_tree_shortcut: bool = True) -> Optional[EvSolution]:
    """Minimum solution via the gadget matching, solved per component.

    ``matching_weight`` sums the matching weights over the components that
    went through the gadget; it is None when every component was a tree
    handled by the shortcut.
    """
    if not has_ev_solution(g):
        return None
    chosen: set[int] = set()
    weight: Optional[int] = None
    for comp in components(g):
        sub, back = g.induced(comp)
        s, w = _min_ev_connected(sub, use_tree_shortcut)
        chosen.update(g.edge_id(back[a], back[b]) for a, b in (sub.edges[e] for e in s))
        if w is not None:
            weight = (weight or 0) + w
    edges = frozenset(chosen)
    return EvSolution(edges, True, forest_components(g, edges), weight)


def is_odd_induced_forest(g: Graph, s: Iterable[int]) -> bool:
    """True iff s is acyclic and each of its components induces an even-order tree of g."""
    s = set(s)
    comps = forest_components(g, s)
    if len(s) != g.n - len(comps):
        return False
    for comp in comps:
        if len(comp) % 2:
            return False
        inside = sum(1 for u, v in g.edges if u in comp and v in comp)
        if inside != len(comp) - 1:
            return False
    return True


def check_optimality_by_cycles(g: Graph, s: Iterable[int], cap: int = DEFAULT_CYCLE_CAP) -> bool:
    """Cycle criterion: no cycle has more solution edges than non-solution edges."""
    s = frozenset(s)
    if not verify_ev(g, s):
        raise InvalidSolutionError("not an Edge-Vertex solution")
    for c in enumerate_cycles(g, cap=cap):
        if 2 * len(c & s) > len(c):
            return False
    return True


def symmetric_difference_check(g: Graph, s1: Iterable[int], s2: Iterable[int]) -> bool:
    """True iff every vertex has even degree in s1 xor s2."""
    s1, s2 = frozenset(s1), frozenset(s2)
    if not (verify_ev(g, s1) and verify_ev(g, s2)):
        raise InvalidSolutionError("both arguments must be Edge-Vertex solutions")
    return all(d % 2 == 0 for d in degrees_in(g, s1 ^ s2))


def claw_free_pm_check(g: Graph) -> bool:
    """Whether 'even order <=> has a perfect matching' holds for claw-free g."""
    if not is_connected(g):
        raise NotConnectedError("graph is not connected")
    if not is_claw_free(g):
        raise NotClawFreeError("graph contains an induced claw")
    return (g.n % 2 == 0) == has_perfect_matching(g)
