"""Brute-force oracles and the deterministic test corpus.

Every check here counts parities straight from the problem definitions
(lamp toggles per button) over exhaustive subsets, vectorised with numpy.
Nothing in this module calls into the solvers it is meant to check.  The
one shared dependency is GF(2) elimination, used only by the cycle-space
mode of :func:`ev_solution_masks`; subset mode cross-checks it.
"""

from __future__ import annotations

import random
from functools import lru_cache
from importlib import resources
from typing import Iterator, Optional

import numpy as np

from .gf2_linalg import incidence_matrix, solve
from .graph_core import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    line_graph,
    path,
    random_connected_graph,
    random_graph,
    random_tree,
    star,
)

SUBSET_MAX_BITS = 20
DEFAULT_NULLITY_CAP = 20
EXHAUSTIVE_MAX_N = 8

# connected unlabelled graphs on n vertices (OEIS A001349)
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


class BudgetError(RuntimeError):
    pass


# -- masks ------------------------------------------------------------------

def _edge_masks_at_vertices(g: Graph) -> list[int]:
    out = [0] * g.n
    for e, (u, v) in enumerate(g.edges):
        out[u] |= 1 << e
        out[v] |= 1 << e
    return out


def _closed_masks(g: Graph) -> list[int]:
    out = [1 << v for v in range(g.n)]
    for u, v in g.edges:
        out[u] |= 1 << v
        out[v] |= 1 << u
    return out


def _edge_adjacency_masks(g: Graph) -> list[int]:
    at = _edge_masks_at_vertices(g)
    return [(at[u] | at[v]) & ~(1 << e) for e, (u, v) in enumerate(g.edges)]


def _all_subsets(bits: int) -> np.ndarray:
    if bits > SUBSET_MAX_BITS:
        raise BudgetError(f"{bits} bits exceeds the subset budget of {SUBSET_MAX_BITS}")
    return np.arange(1 << bits, dtype=np.int64)


def _parity(x: np.ndarray, mask: int) -> np.ndarray:
    return np.bitwise_count(x & np.int64(mask)) & 1


def _sorted_masks(x: np.ndarray) -> np.ndarray:
    # canonical order: by size, then lexicographically by sorted member ids
    if len(x) == 0:
        return x
    keys = sorted(x.tolist(), key=lambda v: (v.bit_count(), _ids(v)))
    return np.array(keys, dtype=np.int64)


def _ids(x: int) -> tuple[int, ...]:
    out = []
    i = 0
    while x:
        if x & 1:
            out.append(i)
        x >>= 1
        i += 1
    return tuple(out)


def to_sets(masks: np.ndarray) -> list[frozenset]:
    return [frozenset(_ids(int(x))) for x in masks]


# -- Edge-Vertex -------------------------------------------------------------

def ev_solution_masks(
    g: Graph, mode: str = "auto", nullity_cap: int = DEFAULT_NULLITY_CAP, canonical: bool = True
) -> np.ndarray:
    """All Edge-Vertex solutions as edge bitmasks.

    ``subset`` scans every edge subset (m <= 20).  ``gf2`` takes one
    solution of the incidence system and adds every cycle-space vector.
    ``auto`` uses subsets when m <= 20, else the cycle space.
    """
    if mode == "auto":
        mode = "subset" if g.m <= SUBSET_MAX_BITS else "gf2"
    if mode == "subset":
        x = _all_subsets(g.m)
        ok = np.ones(len(x), dtype=bool)
        for mask in _edge_masks_at_vertices(g):
            ok &= _parity(x, mask) == 1
        out = x[ok]
    elif mode == "gf2":
        if g.m > 62:
            raise BudgetError("cycle-space mode packs edges into 64-bit words")
        sol = solve(incidence_matrix(g), (1 << g.n) - 1)
        if not sol.consistent:
            out = np.zeros(0, dtype=np.int64)
        else:
            if sol.nullity > nullity_cap:
                raise BudgetError(f"nullity {sol.nullity} exceeds cap {nullity_cap}")
            out = np.array([sol.particular], dtype=np.int64)
            for b in sol.nullspace:
                out = np.concatenate([out, out ^ np.int64(b)])
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return _sorted_masks(out) if canonical else out


def brute_solutions_ev(g: Graph, mode: str = "auto", nullity_cap: int = DEFAULT_NULLITY_CAP) -> list[frozenset]:
    return to_sets(ev_solution_masks(g, mode, nullity_cap))


def min_ev_size(g: Graph) -> Optional[int]:
    """Fewest edges leaving every vertex with odd degree, by DP over parity states.

    State = set of vertices currently of odd degree; each edge flips its two
    endpoints.  Exact for n <= 22.
    """
    if g.n > 22:
        raise BudgetError("parity DP limited to n <= 22")
    size = 1 << g.n
    inf = np.iinfo(np.int32).max // 2
    dp = np.full(size, inf, dtype=np.int32)
    dp[0] = 0
    idx = np.arange(size)
    for u, v in g.edges:
        flip = (1 << u) | (1 << v)
        dp = np.minimum(dp, dp[idx ^ flip] + 1)
    best = int(dp[size - 1])
    return None if best >= inf else best


# -- Vertex-Edge / Vertex-Vertex / Edge-Edge ---------------------------------

def ve_solution_masks(g: Graph) -> np.ndarray:
    """Vertex subsets hitting every edge in exactly one endpoint."""
    x = _all_subsets(g.n)
    ok = np.ones(len(x), dtype=bool)
    for u, v in g.edges:
        ok &= (((x >> u) ^ (x >> v)) & 1) == 1
    return _sorted_masks(x[ok])


def vv_solution_masks(g: Graph) -> np.ndarray:
    """Vertex subsets lighting every lamp under the closed-neighbourhood rule."""
    x = _all_subsets(g.n)
    ok = np.ones(len(x), dtype=bool)
    for mask in _closed_masks(g):
        ok &= _parity(x, mask) == 1
    return _sorted_masks(x[ok])


def ee_solution_masks(g: Graph) -> np.ndarray:
    """Edge subsets F: edges in F see an even number of adjacent F-edges, others odd."""
    x = _all_subsets(g.m)
    ok = np.ones(len(x), dtype=bool)
    for e, mask in enumerate(_edge_adjacency_masks(g)):
        in_f = (x >> e) & 1
        ok &= (_parity(x, mask) ^ in_f) == 1
    return _sorted_masks(x[ok])


def brute_solutions_ve(g: Graph) -> list[frozenset]:
    return to_sets(ve_solution_masks(g))


def brute_solutions_vv(g: Graph) -> list[frozenset]:
    return to_sets(vv_solution_masks(g))


def brute_solutions_ee(g: Graph) -> list[frozenset]:
    return to_sets(ee_solution_masks(g))


def min_vv_size(g: Graph) -> int:
    """Fewest presses lighting every lamp, by DP over lamp states."""
    if g.n > 22:
        raise BudgetError("parity DP limited to n <= 22")
    size = 1 << g.n
    inf = np.iinfo(np.int32).max // 2
    dp = np.full(size, inf, dtype=np.int32)
    dp[0] = 0
    idx = np.arange(size)
    for mask in _closed_masks(g):
        dp = np.minimum(dp, dp[idx ^ mask] + 1)
    return int(dp[size - 1])


# -- corpus ------------------------------------------------------------------

def _encode(g: Graph) -> str:
    code = 0
    for u, v in g.edges:
        code |= 1 << (v * (v - 1) // 2 + u)
    return f"{g.n} {code:x}"


def _decode(line: str) -> Graph:
    n_str, code_str = line.split()
    n, code = int(n_str), int(code_str, 16)
    edges = [(u, v) for v in range(n) for u in range(v) if code >> (v * (v - 1) // 2 + u) & 1]
    return Graph.from_edges(n, edges)


def _invariant(g: Graph) -> tuple:
    deg = g.degrees()
    nbr = sorted((deg[v], tuple(sorted(deg[u] for u in g.adj[v]))) for v in range(g.n))
    tri = 0
    for u, v in g.edges:
        tri += len(set(g.adj[u]) & set(g.adj[v]))
    return (g.m, tuple(nbr), tri)


def generate_connected_graphs(n: int) -> list[Graph]:
    """Connected graphs on n vertices up to isomorphism, built from scratch.

    Every connected graph has a non-cut vertex, so each arises from a
    connected graph on n-1 vertices plus one vertex with a non-empty
    neighbourhood.  Candidates are bucketed by a cheap invariant and
    deduplicated with an exact isomorphism test (networkx).
    """
    import networkx as nx

    if n < 1:
        return []
    level = [Graph.from_edges(1, [])]
    for k in range(2, n + 1):
        buckets: dict[tuple, list[tuple[Graph, object]]] = {}
        out = []
        for base in level:
            for nb in range(1, 1 << (k - 1)):
                edges = list(base.edges) + [(u, k - 1) for u in range(k - 1) if nb >> u & 1]
                cand = Graph.from_edges(k, edges)
                bucket = buckets.setdefault(_invariant(cand), [])
                cnx = nx.Graph(cand.edges)
                cnx.add_nodes_from(range(k))
                if any(nx.is_isomorphic(cnx, other) for _, other in bucket):
                    continue
                bucket.append((cand, cnx))
                out.append(cand)
        level = sorted(out, key=lambda h: (h.m, _encode(h)))
    return level


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """Connected graphs of order exactly n, one per isomorphism class (n <= 8)."""
    if not 1 <= n <= EXHAUSTIVE_MAX_N:
        raise BudgetError(f"exhaustive corpus covers 1 <= n <= {EXHAUSTIVE_MAX_N}")
    data = resources.files("lamplight").joinpath("data", f"connected_{n}.txt").read_text()
    return tuple(_decode(line) for line in data.splitlines() if line.strip())


def random_families(max_n: int, per_family: int, seed: int = 0) -> Iterator[tuple[str, Graph]]:
    """Seeded random graphs tagged by family.

    Families: trees, connected, disconnected (with isolated vertices),
    bipartite, claw-free (line graphs, cycles, complete graphs), and
    circulant regular graphs.  Same arguments give the same stream.
    """
    rng = random.Random(seed)
    lo = 2

    def order() -> int:
        return rng.randint(lo, max_n)

    for _ in range(per_family):
        yield "tree", random_tree(order(), rng.randrange(2**32))
    for _ in range(per_family):
        yield "connected", random_connected_graph(order(), rng.random() * 0.6, rng.randrange(2**32))
    for _ in range(per_family):
        n = order()
        yield "disconnected", random_graph(n, rng.random() * 0.5, rng.randrange(2**32))
    for _ in range(per_family):
        a = rng.randint(1, max(1, max_n // 2))
        b = rng.randint(1, max(1, max_n - a))
        kb = complete_bipartite(a, b)
        keep = [e for e in kb.edges if rng.random() < 0.7]
        yield "bipartite", Graph.from_edges(a + b, keep)
    for i in range(per_family):
        kind = i % 3
        if kind == 0:
            base = random_connected_graph(rng.randint(2, max(2, max_n // 2 + 1)), rng.random() * 0.5, rng.randrange(2**32))
            lg, _ = line_graph(base)
            if 0 < lg.n <= max_n:
                yield "clawfree", lg
            else:
                yield "clawfree", cycle(max(3, min(max_n, 3 + i % 6)))
        elif kind == 1:
            yield "clawfree", cycle(rng.randint(3, max(3, max_n)))
        else:
            yield "clawfree", complete(rng.randint(1, max_n))
    for _ in range(per_family):
        n = rng.randint(max(lo, 3), max(3, max_n))
        steps = sorted(rng.sample(range(1, n // 2 + 1), rng.randint(1, max(1, n // 4))))
        edges = {(min(i, (i + s) % n), max(i, (i + s) % n)) for i in range(n) for s in steps}
        edges.discard((0, 0))
        yield "regular", Graph.from_edges(n, sorted(e for e in edges if e[0] != e[1]))


def corpus(limit_n: int, per_family: int = 0, seed: int = 0) -> Iterator[Graph]:
    """Exhaustive connected graphs of every order up to min(limit_n, 8), then random families.

    Also includes a few fixed disconnected graphs (unions with K1, K2, P3)
    so existence checks see isolated vertices.
    """
    for k in range(1, min(limit_n, EXHAUSTIVE_MAX_N) + 1):
        yield from connected_graphs(k)
    fixed = [
        disjoint_union(complete(2), complete(2)),
        disjoint_union(complete(2), path(3)),
        disjoint_union(complete(1), complete(1)),
        disjoint_union(cycle(4), complete(1), complete(1)),
        disjoint_union(star(4), complete(1)),
        Graph.from_edges(3, []),
    ]
    for g in fixed:
        if g.n <= limit_n:
            yield g
    if per_family:
        for _family, g in random_families(limit_n, per_family, seed):
            yield g
