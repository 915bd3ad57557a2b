"""Exact minimum-weight perfect matching on integer-weighted graphs.

The engine is Edmonds' blossom algorithm in the O(n^3) primal-dual form
(Gabow/Galil bookkeeping with least-slack edges per blossom).  It solves a
maximum-weight maximum-cardinality problem; a minimum-weight perfect
matching is obtained by flipping weights, and ties are broken toward the
lexicographically smallest set of edge ids by a bounded perturbation.
All arithmetic is on Python ints, so results are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph_core import Graph, GraphError

BRUTE_MAX_N = 12
BRUTE_MAX_M = 24


@dataclass(frozen=True)
class WeightedGraph:
    base: Graph
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.weights) != self.base.m:
            raise GraphError("need exactly one weight per edge")
        if any(int(w) != w or w < 0 for w in self.weights):
            raise GraphError("weights must be non-negative integers")

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[tuple[int, int, int]]) -> "WeightedGraph":
        g = Graph.from_edges(n, [(u, v) for u, v, _ in edges])
        return cls(g, tuple(int(w) for _, _, w in edges))

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def m(self) -> int:
        return self.base.m


@dataclass(frozen=True)
class Matching:
    edges: frozenset
    total_weight: int

    @property
    def size(self) -> int:
        return len(self.edges)


class BudgetError(RuntimeError):
    pass


def parse_weighted(text: str | bytes) -> WeightedGraph:
    """Read the weighted edge-list format: ``n m`` then ``u v w`` lines."""
    from .graph_core import ParseError, _int, _lines

    header = None
    edges: list[tuple[int, int, int]] = []
    last = 0
    for lineno, toks in _lines(text):
        last = lineno
        if header is None:
            if len(toks) != 2:
                raise ParseError("header must be 'n m'", lineno)
            header = (_int(toks[0], lineno), _int(toks[1], lineno))
            continue
        if len(toks) != 3:
            raise ParseError("edge line must be 'u v w'", lineno)
        u, v, w = (_int(t, lineno) for t in toks)
        if w < 0:
            raise ParseError("negative weight", lineno)
        edges.append((u, v, w))
    if header is None:
        raise ParseError("missing 'n m' header", last or 1)
    if len(edges) != header[1]:
        raise ParseError(f"header announces {header[1]} edges, found {len(edges)}", last)
    try:
        return WeightedGraph.from_edges(header[0], edges)
    except ParseError:
        raise
    except GraphError as exc:
        raise ParseError(str(exc), last) from None


def format_weighted(wg: WeightedGraph) -> str:
    lines = [f"{wg.n} {wg.m}"]
    lines += [f"{u} {v} {w}" for (u, v), w in zip(wg.base.edges, wg.weights)]
    return "\n".join(lines) + "\n"


def max_weight_matching(
    nvertex: int, edges: Sequence[tuple[int, int, int]], maxcardinality: bool = False
) -> list[int]:
    """Maximum-weight matching of a general graph with integer weights.

    Returns ``mate`` with ``mate[v]`` the partner of v or -1.  With
    ``maxcardinality`` the matching is maximum-weight among those of
    maximum cardinality.
    """
    if not edges:
        return [-1] * nvertex

    nedge = len(edges)
    # doubled weights keep every dual and every delta integral
    edges = [(i, j, 2 * w) for i, j, w in edges]
    maxweight = max(0, max(w for _, _, w in edges))

    # endpoint p of edge k: endpoint[2k] = i, endpoint[2k+1] = j
    endpoint = [edges[p >> 1][p & 1] for p in range(2 * nedge)]
    neighbend: list[list[int]] = [[] for _ in range(nvertex)]
    for k, (i, j, _w) in enumerate(edges):
        neighbend[i].append(2 * k + 1)
        neighbend[j].append(2 * k)

    mate = [-1] * nvertex
    # labels on vertices and top-level blossoms: 0 free, 1 S, 2 T
    label = [0] * (2 * nvertex)
    labelend = [-1] * (2 * nvertex)
    inblossom = list(range(nvertex))
    blossomparent = [-1] * (2 * nvertex)
    blossomchilds: list[Optional[list[int]]] = [None] * (2 * nvertex)
    blossombase = list(range(nvertex)) + [-1] * nvertex
    blossomendps: list[Optional[list[int]]] = [None] * (2 * nvertex)
    bestedge = [-1] * (2 * nvertex)
    blossombestedges: list[Optional[list[int]]] = [None] * (2 * nvertex)
    unusedblossoms = list(range(nvertex, 2 * nvertex))
    dualvar = [maxweight] * nvertex + [0] * nvertex
    allowedge = [False] * nedge
    queue: list[int] = []

    def slack(k: int) -> int:
        i, j, wt = edges[k]
        return dualvar[i] + dualvar[j] - 2 * wt

    def leaves(b: int):
        if b < nvertex:
            yield b
            return
        for t in blossomchilds[b]:
            if t < nvertex:
                yield t
            else:
                yield from leaves(t)

    def assign_label(w: int, t: int, p: int) -> None:
        b = inblossom[w]
        label[w] = label[b] = t
        labelend[w] = labelend[b] = p
        bestedge[w] = bestedge[b] = -1
        if t == 1:
            queue.extend(leaves(b))
        else:
            base = blossombase[b]
            assign_label(endpoint[mate[base]], 1, mate[base] ^ 1)

    def scan_blossom(v: int, w: int) -> int:
        # walk back from v and w in alternation; a shared S-blossom means a new
        # blossom with that base, reaching two roots means an augmenting path
        path = []
        base = -1
        while v != -1 or w != -1:
            b = inblossom[v]
            if label[b] & 4:
                base = blossombase[b]
                break
            path.append(b)
            label[b] = 5
            if labelend[b] == -1:
                v = -1
            else:
                v = endpoint[labelend[b]]
                b = inblossom[v]
                v = endpoint[labelend[b]]
            if w != -1:
                v, w = w, v
        for b in path:
            label[b] = 1
        return base

    def add_blossom(base: int, k: int) -> None:
        v, w, _wt = edges[k]
        bb = inblossom[base]
        bv = inblossom[v]
        bw = inblossom[w]
        b = unusedblossoms.pop()
        blossombase[b] = base
        blossomparent[b] = -1
        blossomparent[bb] = b
        path: list[int] = []
        endps: list[int] = []
        blossomchilds[b] = path
        blossomendps[b] = endps
        while bv != bb:
            blossomparent[bv] = b
            path.append(bv)
            endps.append(labelend[bv])
            v = endpoint[labelend[bv]]
            bv = inblossom[v]
        path.append(bb)
        path.reverse()
        endps.reverse()
        endps.append(2 * k)
        while bw != bb:
            blossomparent[bw] = b
            path.append(bw)
            endps.append(labelend[bw] ^ 1)
            w = endpoint[labelend[bw]]
            bw = inblossom[w]
        label[b] = 1
        labelend[b] = labelend[bb]
        dualvar[b] = 0
        for v in leaves(b):
            if label[inblossom[v]] == 2:
                queue.append(v)
            inblossom[v] = b
        bestedgeto = [-1] * (2 * nvertex)
        for bv in path:
            if blossombestedges[bv] is None:
                nblists = [[p >> 1 for p in neighbend[v]] for v in leaves(bv)]
            else:
                nblists = [blossombestedges[bv]]
            for nblist in nblists:
                for k2 in nblist:
                    i, j, _ = edges[k2]
                    if inblossom[j] == b:
                        i, j = j, i
                    bj = inblossom[j]
                    if (
                        bj != b
                        and label[bj] == 1
                        and (bestedgeto[bj] == -1 or slack(k2) < slack(bestedgeto[bj]))
                    ):
                        bestedgeto[bj] = k2
            blossombestedges[bv] = None
            bestedge[bv] = -1
        best = [k2 for k2 in bestedgeto if k2 != -1]
        blossombestedges[b] = best
        bestedge[b] = -1
        for k2 in best:
            if bestedge[b] == -1 or slack(k2) < slack(bestedge[b]):
                bestedge[b] = k2

    def expand_blossom(b: int, endstage: bool) -> None:
        for s in blossomchilds[b]:
            blossomparent[s] = -1
            if s < nvertex:
                inblossom[s] = s
            elif endstage and dualvar[s] == 0:
                expand_blossom(s, endstage)
            else:
                for v in leaves(s):
                    inblossom[v] = s
        if not endstage and label[b] == 2:
            # relabel the even-length path from the entry child to the base
            childs = blossomchilds[b]
            endps = blossomendps[b]
            entrychild = inblossom[endpoint[labelend[b] ^ 1]]
            j = childs.index(entrychild)
            if j & 1:
                j -= len(childs)
                jstep, endptrick = 1, 0
            else:
                jstep, endptrick = -1, 1
            p = labelend[b]
            while j != 0:
                label[endpoint[p ^ 1]] = 0
                label[endpoint[endps[j - endptrick] ^ endptrick ^ 1]] = 0
                assign_label(endpoint[p ^ 1], 2, p)
                allowedge[endps[j - endptrick] >> 1] = True
                j += jstep
                p = endps[j - endptrick] ^ endptrick
                allowedge[p >> 1] = True
                j += jstep
            bv = childs[j]
            label[endpoint[p ^ 1]] = label[bv] = 2
            labelend[endpoint[p ^ 1]] = labelend[bv] = p
            bestedge[bv] = -1
            j += jstep
            while childs[j] != entrychild:
                bv = childs[j]
                if label[bv] == 1:
                    j += jstep
                    continue
                v = -1
                for v in leaves(bv):
                    if label[v] != 0:
                        break
                if label[v] != 0:
                    label[v] = 0
                    label[endpoint[mate[blossombase[bv]]]] = 0
                    assign_label(v, 2, labelend[v])
                j += jstep
        label[b] = labelend[b] = -1
        blossomchilds[b] = blossomendps[b] = None
        blossombase[b] = -1
        blossombestedges[b] = None
        bestedge[b] = -1
        unusedblossoms.append(b)

    def augment_blossom(b: int, v: int) -> None:
        t = v
        while blossomparent[t] != b:
            t = blossomparent[t]
        if t >= nvertex:
            augment_blossom(t, v)
        childs = blossomchilds[b]
        endps = blossomendps[b]
        i = j = childs.index(t)
        if i & 1:
            j -= len(childs)
            jstep, endptrick = 1, 0
        else:
            jstep, endptrick = -1, 1
        while j != 0:
            j += jstep
            t = childs[j]
            p = endps[j - endptrick] ^ endptrick
            if t >= nvertex:
                augment_blossom(t, endpoint[p])
            j += jstep
            t = childs[j]
            if t >= nvertex:
                augment_blossom(t, endpoint[p ^ 1])
            mate[endpoint[p]] = p ^ 1
            mate[endpoint[p ^ 1]] = p
        blossomchilds[b] = childs[i:] + childs[:i]
        blossomendps[b] = endps[i:] + endps[:i]
        blossombase[b] = blossombase[blossomchilds[b][0]]

    def augment_matching(k: int) -> None:
        v, w, _wt = edges[k]
        for s, p in ((v, 2 * k + 1), (w, 2 * k)):
            while True:
                bs = inblossom[s]
                if bs >= nvertex:
                    augment_blossom(bs, s)
                mate[s] = p
                if labelend[bs] == -1:
                    break
                t = endpoint[labelend[bs]]
                bt = inblossom[t]
                s = endpoint[labelend[bt]]
                j = endpoint[labelend[bt] ^ 1]
                if bt >= nvertex:
                    augment_blossom(bt, j)
                mate[j] = labelend[bt]
                p = labelend[bt] ^ 1

    for _stage in range(nvertex):
        label[:] = [0] * (2 * nvertex)
        bestedge[:] = [-1] * (2 * nvertex)
        blossombestedges[nvertex:] = [None] * nvertex
        allowedge[:] = [False] * nedge
        queue[:] = []
        for v in range(nvertex):
            if mate[v] == -1 and label[inblossom[v]] == 0:
                assign_label(v, 1, -1)

        augmented = False
        while True:
            while queue and not augmented:
                v = queue.pop()
                for p in neighbend[v]:
                    k = p >> 1
                    w = endpoint[p]
                    if inblossom[v] == inblossom[w]:
                        continue
                    if not allowedge[k]:
                        kslack = slack(k)
                        if kslack <= 0:
                            allowedge[k] = True
                    if allowedge[k]:
                        if label[inblossom[w]] == 0:
                            assign_label(w, 2, p ^ 1)
                        elif label[inblossom[w]] == 1:
                            base = scan_blossom(v, w)
                            if base >= 0:
                                add_blossom(base, k)
                            else:
                                augment_matching(k)
                                augmented = True
                                break
                        elif label[w] == 0:
                            label[w] = 2
                            labelend[w] = p ^ 1
                    elif label[inblossom[w]] == 1:
                        b = inblossom[v]
                        if bestedge[b] == -1 or kslack < slack(bestedge[b]):
                            bestedge[b] = k
                    elif label[w] == 0:
                        if bestedge[w] == -1 or kslack < slack(bestedge[w]):
                            bestedge[w] = k
            if augmented:
                break

            # no augmenting path under the current duals: pick the dual step
            deltatype = -1
            delta = deltaedge = deltablossom = 0
            if not maxcardinality:
                deltatype = 1
                delta = min(dualvar[:nvertex])
            for v in range(nvertex):
                if label[inblossom[v]] == 0 and bestedge[v] != -1:
                    d = slack(bestedge[v])
                    if deltatype == -1 or d < delta:
                        delta, deltatype, deltaedge = d, 2, bestedge[v]
            for b in range(2 * nvertex):
                if blossomparent[b] == -1 and label[b] == 1 and bestedge[b] != -1:
                    kslack = slack(bestedge[b])
                    d = kslack // 2
                    if deltatype == -1 or d < delta:
                        delta, deltatype, deltaedge = d, 3, bestedge[b]
            for b in range(nvertex, 2 * nvertex):
                if (
                    blossombase[b] >= 0
                    and blossomparent[b] == -1
                    and label[b] == 2
                    and (deltatype == -1 or dualvar[b] < delta)
                ):
                    delta, deltatype, deltablossom = dualvar[b], 4, b
            if deltatype == -1:
                # maxcardinality and nothing else left: optimum reached
                deltatype = 1
                delta = max(0, min(dualvar[:nvertex]))

            for v in range(nvertex):
                lab = label[inblossom[v]]
                if lab == 1:
                    dualvar[v] -= delta
                elif lab == 2:
                    dualvar[v] += delta
            for b in range(nvertex, 2 * nvertex):
                if blossombase[b] >= 0 and blossomparent[b] == -1:
                    if label[b] == 1:
                        dualvar[b] += delta
                    elif label[b] == 2:
                        dualvar[b] -= delta

            if deltatype == 1:
                break
            if deltatype == 2:
                allowedge[deltaedge] = True
                i, j, _ = edges[deltaedge]
                if label[inblossom[i]] == 0:
                    i, j = j, i
                queue.append(i)
            elif deltatype == 3:
                allowedge[deltaedge] = True
                i, _j, _ = edges[deltaedge]
                queue.append(i)
            else:
                expand_blossom(deltablossom, False)

        if not augmented:
            break
        for b in range(nvertex, 2 * nvertex):
            if (
                blossomparent[b] == -1
                and blossombase[b] >= 0
                and label[b] == 1
                and dualvar[b] == 0
            ):
                expand_blossom(b, True)

    return [endpoint[p] if p >= 0 else -1 for p in mate]


def min_weight_perfect_matching(wg: WeightedGraph, tie_break: bool = True) -> Optional[Matching]:
    """Minimum-weight perfect matching, or None if the graph has none.

    With ``tie_break`` the returned optimum is the one whose sorted edge-id
    list is lexicographically smallest.
    """
    g = wg.base
    if g.n % 2:
        return None
    if g.n == 0:
        return Matching(frozenset(), 0)
    m = g.m
    top = max(wg.weights, default=0) + 1
    if tie_break:
        # bonus 2^(m-1-e) prefers low edge ids; all bonuses together stay < scale
        scale = 1 << m
        flipped = [
            (u, v, (top - w) * scale + (1 << (m - 1 - e)))
            for e, ((u, v), w) in enumerate(zip(g.edges, wg.weights))
        ]
    else:
        flipped = [(u, v, top - w) for (u, v), w in zip(g.edges, wg.weights)]
    mate = max_weight_matching(g.n, flipped, maxcardinality=True)
    if any(x == -1 for x in mate):
        return None
    chosen = frozenset(g.edge_id(v, mate[v]) for v in range(g.n) if v < mate[v])
    return Matching(chosen, sum(wg.weights[e] for e in chosen))


def has_perfect_matching(g: Graph) -> bool:
    return min_weight_perfect_matching(WeightedGraph(g, (0,) * g.m), tie_break=False) is not None


def brute_min_weight_pm(wg: WeightedGraph) -> Optional[Matching]:
    """Exhaustive minimum-weight perfect matching (oracle; small graphs only).

    Branches on the smallest uncovered vertex.  Ties resolve to the
    lexicographically smallest sorted edge-id list, like the engine.
    """
    g = wg.base
    if g.n > BRUTE_MAX_N and g.m > BRUTE_MAX_M:
        raise BudgetError(f"brute force limited to n <= {BRUTE_MAX_N} or m <= {BRUTE_MAX_M}")
    if g.n % 2:
        return None
    inc = g.incident
    covered = [False] * g.n
    best: list = [None, None]  # weight, sorted ids
    chosen: list[int] = []

    def rec(weight: int) -> None:
        v = next((x for x in range(g.n) if not covered[x]), -1)
        if v == -1:
            ids = sorted(chosen)
            if best[0] is None or (weight, ids) < (best[0], best[1]):
                best[0], best[1] = weight, ids
            return
        covered[v] = True
        for u, e in zip(g.adj[v], inc[v]):
            if not covered[u]:
                covered[u] = True
                chosen.append(e)
                rec(weight + wg.weights[e])
                chosen.pop()
                covered[u] = False
        covered[v] = False

    rec(0)
    if best[0] is None:
        return None
    return Matching(frozenset(best[1]), best[0])
