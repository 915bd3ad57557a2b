"""Undirected simple graphs and the structural helpers shared by the solvers.

Vertices are dense ids ``0..n-1``.  Edges are stored as ``(u, v)`` with
``u < v`` and carry a stable id equal to their position in ``Graph.edges``.
Neighbour order is the order of first appearance in the input edge list and
never changes afterwards; the gadget construction indexes neighbours by
position, so this order is part of the contract.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

VertexSet = frozenset
EdgeSet = frozenset

DEFAULT_CYCLE_CAP = 10_000


class GraphError(ValueError):
    """Base class for malformed graph input or violated preconditions."""


class ParseError(GraphError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateEdgeError(ParseError):
    pass


class SelfLoopError(ParseError):
    pass


class NotConnectedError(GraphError):
    pass


class CycleBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph.

    Build one with :meth:`from_edges` (or the parsers/generators) rather than
    calling the constructor directly; the constructor trusts its arguments.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        norm: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for lineno, (u, v) in enumerate(edges, start=1):
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {lineno} ({u}, {v}) out of range for n={n}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdgeError(f"duplicate edge {key}")
            seen.add(key)
            norm.append(key)
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, tuple(norm), tuple(tuple(a) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident to each vertex, in neighbour order."""
        idx = self.edge_index
        return tuple(
            tuple(idx[(u, v) if u < v else (v, u)] for v in self.adj[u])
            for u in range(self.n)
        )

    def edge_id(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_index

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``vertices`` (relabelled in sorted order).

        Returns the subgraph and the list mapping new ids back to old ids.
        Edge order follows the parent graph's edge order.
        """
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        sub = [
            (pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos
        ]
        return Graph.from_edges(len(keep), sub), keep

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- parsing / writing -------------------------------------------------------

def _lines(text: str | bytes) -> Iterator[tuple[int, list[str]]]:
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError("input is not ASCII") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def _build(n: int, edges: list[tuple[int, int, int]]) -> Graph:
    # re-raise construction errors with the offending line attached
    seen: set[tuple[int, int]] = set()
    for u, v, lineno in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range for n={n}", lineno)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key}", lineno)
        seen.add(key)
    return Graph.from_edges(n, [(u, v) for u, v, _ in edges])


def parse_edgelist(text: str | bytes) -> Graph:
    header: Optional[tuple[int, int]] = None
    edges: list[tuple[int, int, int]] = []
    last = 0
    for lineno, toks in _lines(text):
        last = lineno
        if header is None:
            if len(toks) != 2:
                raise ParseError("header must be 'n m'", lineno)
            header = (_int(toks[0], lineno), _int(toks[1], lineno))
            if header[0] < 0 or header[1] < 0:
                raise ParseError("negative count in header", lineno)
            continue
        if len(toks) != 2:
            raise ParseError("edge line must be 'u v'", lineno)
        edges.append((_int(toks[0], lineno), _int(toks[1], lineno), lineno))
    if header is None:
        raise ParseError("missing 'n m' header", last or 1)
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}", last)
    return _build(n, edges)


def parse_dimacs(text: str | bytes) -> Graph:
    header: Optional[tuple[int, int]] = None
    edges: list[tuple[int, int, int]] = []
    last = 0
    for lineno, toks in _lines(text):
        last = lineno
        kind = toks[0]
        if kind == "c":
            continue
        if kind == "p":
            if header is not None:
                raise ParseError("second problem line", lineno)
            if len(toks) != 4 or toks[1] != "edge":
                raise ParseError("problem line must be 'p edge n m'", lineno)
            header = (_int(toks[2], lineno), _int(toks[3], lineno))
        elif kind == "e":
            if header is None:
                raise ParseError("edge line before 'p edge' line", lineno)
            if len(toks) != 3:
                raise ParseError("edge line must be 'e u v'", lineno)
            edges.append((_int(toks[1], lineno) - 1, _int(toks[2], lineno) - 1, lineno))
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)
    if header is None:
        raise ParseError("missing 'p edge n m' line", last or 1)
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}", last)
    return _build(n, edges)


def parse_graph(text: str | bytes, format: str = "edgelist") -> Graph:
    if format == "edgelist":
        return parse_edgelist(text)
    if format == "dimacs":
        return parse_dimacs(text)
    raise ValueError(f"unknown graph format {format!r}")


def format_graph(g: Graph, format: str = "edgelist") -> str:
    if format == "edgelist":
        lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    elif format == "dimacs":
        lines = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.edges]
    else:
        raise ValueError(f"unknown graph format {format!r}")
    return "\n".join(lines) + "\n"


# -- generators --------------------------------------------------------------

def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    if n < 1:
        raise GraphError("star needs n >= 1")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("complete bipartite graph needs a, b >= 1")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def random_tree(n: int, seed: int = 0) -> Graph:
    """Uniform labelled tree from a random Prüfer sequence."""
    if n < 1:
        raise GraphError("tree needs n >= 1")
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return Graph.from_edges(n, sorted((min(e), max(e)) for e in edges))


def random_graph(n: int, p: float, seed: int = 0) -> Graph:
    """Erdős–Rényi G(n, p)."""
    if n < 1:
        raise GraphError("random graph needs n >= 1")
    if not 0.0 <= p <= 1.0:
        raise GraphError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    return Graph.from_edges(
        n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    )


def random_connected_graph(n: int, p: float, seed: int = 0) -> Graph:
    """Random spanning tree plus independent extra edges with probability p."""
    rng = random.Random(seed)
    tree = random_tree(n, rng.randrange(2**32))
    extra = {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    return Graph.from_edges(n, sorted(set(tree.edges) | extra))


GENERATORS = {
    "path": path,
    "cycle": cycle,
    "star": star,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "random_tree": random_tree,
    "random_graph": random_graph,
    "random_connected": random_connected_graph,
}


def generate(kind: str, *params, seed: Optional[int] = None) -> Graph:
    """Dispatch to a named generator; ``seed`` only applies to random kinds."""
    try:
        fn = GENERATORS[kind]
    except KeyError:
        raise GraphError(f"unknown generator {kind!r}") from None
    if kind.startswith("random"):
        return fn(*params, seed=0 if seed is None else seed)
    return fn(*params)


def disjoint_union(*graphs: Graph) -> Graph:
    edges: list[tuple[int, int]] = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph.from_edges(offset, edges)


# -- structure ---------------------------------------------------------------

def components(g: Graph) -> list[VertexSet]:
    """Connected components, ordered by their smallest vertex."""
    seen = [False] * g.n
    out = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def bipartition(g: Graph) -> Optional[list[tuple[VertexSet, VertexSet]]]:
    """Per-component 2-colouring with each BFS root in the first side.

    Returns None if some component holds an odd cycle.
    """
    colour = [-1] * g.n
    out = []
    for root in range(g.n):
        if colour[root] != -1:
            continue
        colour[root] = 0
        sides: tuple[list[int], list[int]] = ([root], [])
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if colour[v] == -1:
                    colour[v] = 1 - colour[u]
                    sides[colour[v]].append(v)
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return None
        out.append((frozenset(sides[0]), frozenset(sides[1])))
    return out


def spanning_tree(g: Graph, root: int = 0) -> EdgeSet:
    """Edge ids of the BFS tree from ``root``; g must be connected."""
    if g.n == 0:
        return frozenset()
    seen = [False] * g.n
    seen[root] = True
    tree = []
    queue = deque([root])
    inc = g.incident
    while queue:
        u = queue.popleft()
        for v, e in zip(g.adj[u], inc[u]):
            if not seen[v]:
                seen[v] = True
                tree.append(e)
                queue.append(v)
    if len(tree) != g.n - 1:
        raise NotConnectedError("graph is not connected")
    return frozenset(tree)


def line_graph(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Line graph L(g) and the map from its vertex ids to edge ids of g.

    Vertex i of L(g) is edge i of g, so the map is the identity; it is
    returned anyway so callers do not depend on that.
    """
    pairs = set()
    for inc in g.incident:
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                e, f = inc[a], inc[b]
                pairs.add((e, f) if e < f else (f, e))
    return Graph.from_edges(g.m, sorted(pairs)), tuple(range(g.m))


def is_claw_free(g: Graph) -> bool:
    for v in range(g.n):
        nb = g.adj[v]
        k = len(nb)
        for a in range(k):
            for b in range(a + 1, k):
                if g.has_edge(nb[a], nb[b]):
                    continue
                for c in range(b + 1, k):
                    if not g.has_edge(nb[a], nb[c]) and not g.has_edge(nb[b], nb[c]):
                        return False
    return True


def enumerate_cycles(
    g: Graph, max_len: Optional[int] = None, cap: int = DEFAULT_CYCLE_CAP
) -> list[EdgeSet]:
    """All simple cycles (as edge-id sets) of length at most ``max_len``.

    Each cycle is found once from its smallest vertex, in one orientation.
    Raises CycleBudgetExceeded once more than ``cap`` cycles are found.
    """
    limit = g.n if max_len is None else min(max_len, g.n)
    out: list[EdgeSet] = []
    on_path = [False] * g.n

    for s in range(g.n):
        # DFS over simple paths s -> ... restricted to vertices > s
        on_path[s] = True
        stack = [(s, iter(g.adj[s]))]
        verts = [s]
        while stack:
            u, it = stack[-1]
            advanced = False
            for v in it:
                if v == s:
                    if len(verts) >= 3 and verts[1] < verts[-1]:
                        ids = [g.edge_id(verts[i], verts[i + 1]) for i in range(len(verts) - 1)]
                        ids.append(g.edge_id(verts[-1], s))
                        out.append(frozenset(ids))
                        if len(out) > cap:
                            raise CycleBudgetExceeded(
                                f"more than {cap} cycles; raise the cap or use a smaller graph"
                            )
                    continue
                if v < s or on_path[v] or len(verts) >= limit:
                    continue
                on_path[v] = True
                verts.append(v)
                stack.append((v, iter(g.adj[v])))
                advanced = True
                break
            if not advanced:
                stack.pop()
                on_path[verts.pop()] = False
    return out


def degrees_in(g: Graph, s: Iterable[int]) -> list[int]:
    """Degree of every vertex in the spanning subgraph with edge ids ``s``."""
    deg = [0] * g.n
    for e in s:
        u, v = g.edges[e]
        deg[u] += 1
        deg[v] += 1
    return deg


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)
