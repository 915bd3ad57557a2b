"""Theorem suites: solver output swept against the oracles over a corpus.

Each suite returns a :class:`SuiteResult` with the number of instances
examined and a description of every failure.  Suites are deterministic
for a given seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

import numpy as np

from . import oracle
from .graph_core import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    enumerate_cycles,
    is_claw_free,
    is_connected,
    line_graph,
    random_connected_graph,
    random_graph,
    random_tree,
    star,
)
from .lamp_ev import (
    claw_free_pm_check,
    has_ev_solution,
    is_odd_induced_forest,
    min_ev,
    spanning_tree_ev_solution,
    symmetric_difference_check,
    tree_ev_solution,
    verify_ev,
)
from .lamp_ve import solve_ve, verify_ve
from .lamp_vv_ee import solve_ee, solve_vv, verify_ee, verify_vv
from .matching import (
    WeightedGraph,
    brute_min_weight_pm,
    has_perfect_matching,
    min_weight_perfect_matching,
)

# literal pairwise comparison up to this many solutions per graph
PAIRWISE_MAX_SOLUTIONS = 256
CYCLE_NULLITY_CAP = 21


@dataclass
class SuiteResult:
    name: str
    instances: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        self.failures.append(msg)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name}: {self.instances} instances, {len(self.failures)} failures"
        return line


def _desc(g: Graph) -> str:
    return f"n={g.n} edges={list(g.edges)}"


# -- instance families -------------------------------------------------------

def even_connected_exhaustive(limit_n: int = 8) -> Iterator[Graph]:
    for n in range(2, min(limit_n, oracle.EXHAUSTIVE_MAX_N) + 1, 2):
        yield from oracle.connected_graphs(n)


def even_connected_random(count: int, max_n: int = 12, seed: int = 0) -> Iterator[Graph]:
    rng = random.Random(seed)
    for _ in range(count):
        n = 2 * rng.randint(1, max_n // 2)
        yield random_connected_graph(n, rng.uniform(0.05, 0.6), rng.randrange(2**32))


def reduction_instances(limit_n: int = 8, random_count: int = 500, random_max_n: int = 12,
                        seed: int = 0) -> Iterator[Graph]:
    yield from even_connected_exhaustive(limit_n)
    yield from even_connected_random(random_count, random_max_n, seed)


@dataclass
class EvRecord:
    graph: Graph
    witness: frozenset
    size: int
    matching_weight: Optional[int]
    oracle_min: Optional[int]
    approx_size: int


def ev_record(g: Graph) -> EvRecord:
    sol = min_ev(g, use_tree_shortcut=False)
    approx = spanning_tree_ev_solution(g)
    return EvRecord(g, sol.edges, sol.size, sol.matching_weight, oracle.min_ev_size(g), approx.size)


def ev_records(limit_n: int = 8, random_count: int = 500, seed: int = 0) -> list[EvRecord]:
    return [ev_record(g) for g in reduction_instances(limit_n, random_count, seed=seed)]


# -- checks over EvRecords (criteria sharing one instance set) ---------------

def check_reduction(records: list[EvRecord]) -> SuiteResult:
    res = SuiteResult("reduction")
    for r in records:
        res.instances += 1
        if r.size != r.oracle_min:
            res.fail(f"min_ev size {r.size} != oracle {r.oracle_min}: {_desc(r.graph)}")
        if not verify_ev(r.graph, r.witness):
            res.fail(f"min_ev witness invalid: {_desc(r.graph)}")
    return res


def check_weight_relation(records: list[EvRecord]) -> SuiteResult:
    res = SuiteResult("weight")
    for r in records:
        res.instances += 1
        if r.matching_weight != 2 * r.size:
            res.fail(f"matching weight {r.matching_weight} != 2*{r.size}: {_desc(r.graph)}")
    return res


def check_bounds(records: list[EvRecord]) -> SuiteResult:
    res = SuiteResult("bounds")
    for r in records:
        res.instances += 1
        n = r.graph.n
        if not (n / 2 <= r.size <= n - 1):
            res.fail(f"size {r.size} outside [n/2, n-1]: {_desc(r.graph)}")
    # extremal witnesses
    for n in (2, 4, 6, 8, 10):
        res.instances += 1
        g = star(n)
        sol = min_ev(g, use_tree_shortcut=False)
        if sol.size != n - 1:
            res.fail(f"star K1,{n - 1} gave {sol.size}, expected {n - 1}")
    for g in (cycle(4), cycle(6), complete(4), complete_bipartite(3, 3)):
        res.instances += 1
        sol = min_ev(g, use_tree_shortcut=False)
        degs = [0] * g.n
        for e in sol.edges:
            u, v = g.edges[e]
            degs[u] += 1
            degs[v] += 1
        if sol.size != g.n // 2 or any(d != 1 for d in degs):
            res.fail(f"perfect-matching graph not at n/2 with a perfect matching: {_desc(g)}")
    return res


def check_approximation(records: list[EvRecord]) -> SuiteResult:
    res = SuiteResult("approx")
    for r in records:
        res.instances += 1
        n = r.graph.n
        # |S| <= 2(1 - 1/n)|S_opt|  <=>  n|S| <= 2(n - 1)|S_opt|, in integers
        if n * r.approx_size > 2 * (n - 1) * r.size:
            res.fail(f"spanning-tree size {r.approx_size} vs optimum {r.size}: {_desc(r.graph)}")
    return res


def check_structure(records: list[EvRecord]) -> SuiteResult:
    res = SuiteResult("structure")
    for r in records:
        res.instances += 1
        if not is_odd_induced_forest(r.graph, r.witness):
            res.fail(f"optimal witness is not an induced forest of even trees: {_desc(r.graph)}")
    return res


# -- self-contained suites ---------------------------------------------------

def suite_existence(limit_n: int = 10, per_family: int = 60, seed: int = 0) -> SuiteResult:
    res = SuiteResult("existence")
    for g in oracle.corpus(limit_n, per_family, seed):
        res.instances += 1
        found = oracle.min_ev_size(g) is not None
        if has_ev_solution(g) != found:
            res.fail(f"has_ev_solution={has_ev_solution(g)} but oracle found={found}: {_desc(g)}")
    return res


def random_even_trees(count: int = 200, max_n: int = 16, seed: int = 0) -> Iterator[Graph]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_tree(2 * rng.randint(1, max_n // 2), rng.randrange(2**32))


def suite_uniqueness(count: int = 200, max_n: int = 16, seed: int = 0) -> SuiteResult:
    res = SuiteResult("uniqueness")
    for t in random_even_trees(count, max_n, seed):
        res.instances += 1
        sols = oracle.brute_solutions_ev(t, mode="subset")
        if len(sols) != 1:
            res.fail(f"oracle found {len(sols)} solutions on a tree: {_desc(t)}")
            continue
        if tree_ev_solution(t) != sols[0]:
            res.fail(f"tree pass disagrees with oracle: {_desc(t)}")
        if min_ev(t, use_tree_shortcut=False).edges != sols[0]:
            res.fail(f"gadget optimum disagrees with the unique solution: {_desc(t)}")
    return res


def connected_corpus(max_n: int = 12, per_family: int = 60, seed: int = 0) -> Iterator[Graph]:
    for g in oracle.corpus(max_n, per_family, seed):
        if g.n >= 1 and is_connected(g):
            yield g


def suite_ve(max_n: int = 12, per_family: int = 60, seed: int = 0) -> SuiteResult:
    res = SuiteResult("ve")
    for g in connected_corpus(max_n, per_family, seed):
        res.instances += 1
        sol = solve_ve(g)
        found = oracle.ve_solution_masks(g)
        bipartite_by_cycles = _has_no_odd_closed_walk(g)
        if (sol is not None) != bipartite_by_cycles:
            res.fail(f"solve_ve feasibility {sol is not None} vs bipartite {bipartite_by_cycles}: {_desc(g)}")
            continue
        if sol is None:
            if len(found):
                res.fail(f"oracle found solutions on a non-bipartite graph: {_desc(g)}")
            continue
        u_side, v_side = sol.pairs[0]
        if len(sol.chosen_min) != min(len(u_side), len(v_side)):
            res.fail(f"chosen_min size wrong: {_desc(g)}")
        if g.m == 0:
            # K1: every vertex set is vacuously a solution
            continue
        if len(found) != 2 or set(oracle.to_sets(found)) != {u_side, v_side}:
            res.fail(f"oracle found {len(found)} solutions, expected exactly U and V: {_desc(g)}")
        if not (verify_ve(g, u_side) and verify_ve(g, v_side)):
            res.fail(f"bipartition side fails verify_ve: {_desc(g)}")
    return res


def _has_no_odd_closed_walk(g: Graph) -> bool:
    # bipartite iff no edge joins two vertices of equal BFS depth;
    # deliberately separate from graph_core.bipartition
    layer = [-1] * g.n
    for s in range(g.n):
        if layer[s] != -1:
            continue
        layer[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for v in g.adj[u]:
                    if layer[v] == -1:
                        layer[v] = layer[u] + 1
                        nxt.append(v)
            frontier = nxt
    return all(layer[u] != layer[v] for u, v in g.edges)


def suite_vv(limit_n: int = 10, per_family: int = 60, random_count: int = 1000,
             random_max_n: int = 40, seed: int = 0) -> SuiteResult:
    res = SuiteResult("vv")
    rng = random.Random(seed)
    graphs: list[Graph] = list(oracle.corpus(limit_n, per_family, seed))
    for _ in range(random_count):
        n = rng.randint(1, random_max_n)
        graphs.append(random_graph(n, rng.random(), rng.randrange(2**32)))
    for g in graphs:
        res.instances += 1
        try:
            x = solve_vv(g)
        except RuntimeError as exc:
            res.fail(f"inconsistent system ({exc}): {_desc(g)}")
            continue
        if not verify_vv(g, x):
            res.fail(f"solve_vv witness fails verify_vv: {_desc(g)}")
    return res


def suite_ee(max_m: int = 12, subsets_per_graph: int = 100, limit_n: int = 8, seed: int = 0) -> SuiteResult:
    res = SuiteResult("ee")
    rng = random.Random(seed)
    for g in oracle.corpus(limit_n):
        if g.m > max_m:
            continue
        res.instances += 1
        lg, lg_map = line_graph(g)
        back = {e: v for v, e in enumerate(lg_map)}
        candidates = [solve_ee(g)]
        for _ in range(subsets_per_graph):
            candidates.append(frozenset(e for e in range(g.m) if rng.random() < 0.5))
        for k, f in enumerate(candidates):
            direct = verify_ee(g, f)
            via_line = verify_vv(lg, [back[e] for e in f])
            if direct != via_line:
                res.fail(f"verify_ee={direct} vs line-graph verify_vv={via_line} for F={sorted(f)}: {_desc(g)}")
            if k == 0 and not direct:
                res.fail(f"solve_ee witness fails verify_ee: {_desc(g)}")
    return res


def claw_free_instances(count: int = 200, seed: int = 0) -> Iterator[Graph]:
    rng = random.Random(seed)
    made = 0
    while made < count:
        kind = made % 3
        if kind == 0:
            base = random_connected_graph(rng.randint(2, 7), rng.uniform(0.1, 0.6), rng.randrange(2**32))
            g, _ = line_graph(base)
            if g.n == 0:
                continue
        elif kind == 1:
            g = cycle(rng.randint(3, 20))
        else:
            g = complete(rng.randint(1, 12))
        made += 1
        yield g


def suite_clawfree(count: int = 200, seed: int = 0) -> SuiteResult:
    res = SuiteResult("clawfree")
    for g in claw_free_instances(count, seed):
        res.instances += 1
        if not is_claw_free(g):
            res.fail(f"generator produced a claw: {_desc(g)}")
            continue
        if not claw_free_pm_check(g):
            res.fail(f"even order={g.n % 2 == 0} but has_perfect_matching={has_perfect_matching(g)}: {_desc(g)}")
        if g.n % 2 == 0:
            sol = min_ev(g, use_tree_shortcut=False)
            if sol.size != g.n // 2:
                res.fail(f"min_ev size {sol.size} != n/2 on claw-free graph: {_desc(g)}")
    return res


def _parity_ok(masks: np.ndarray, vertex_masks: list[int], odd: bool) -> np.ndarray:
    ok = np.ones(len(masks), dtype=bool)
    want = 1 if odd else 0
    for vm in vertex_masks:
        ok &= (np.bitwise_count(masks & np.int64(vm)) & 1) == want
    return ok


def _vertex_edge_masks(g: Graph) -> list[int]:
    out = [0] * g.n
    for e, (u, v) in enumerate(g.edges):
        out[u] |= 1 << e
        out[v] |= 1 << e
    return out


def _to_ids(x: int) -> list[int]:
    return [i for i in range(x.bit_length()) if x >> i & 1]


def suite_symdiff(limit_n: int = 8) -> SuiteResult:
    """Every pair of solutions differs by an even subgraph.

    Graphs with at most PAIRWISE_MAX_SOLUTIONS solutions are checked pair
    by pair.  Larger solution sets are checked against a fixed reference
    solution r: s1 ^ s2 = (s1 ^ r) ^ (s2 ^ r), and even subgraphs are
    closed under xor, so all pairs pass iff every s ^ r is even.
    """
    res = SuiteResult("symdiff")
    for g in even_connected_exhaustive(limit_n):
        res.instances += 1
        sols = oracle.ev_solution_masks(g, mode="gf2", nullity_cap=CYCLE_NULLITY_CAP, canonical=False)
        vm = _vertex_edge_masks(g)
        if len(sols) <= 16:
            pairs = [(a, b) for i, a in enumerate(sols.tolist()) for b in sols.tolist()[i:]]
            for a, b in pairs:
                if not symmetric_difference_check(g, _to_ids(a), _to_ids(b)):
                    res.fail(f"pair {a:#x},{b:#x} not even: {_desc(g)}")
        elif len(sols) <= PAIRWISE_MAX_SOLUTIONS:
            i, j = np.triu_indices(len(sols))
            diffs = sols[i] ^ sols[j]
            if not _parity_ok(diffs, vm, odd=False).all():
                res.fail(f"some pair has an odd-degree symmetric difference: {_desc(g)}")
        else:
            diffs = sols ^ sols[0]
            if not _parity_ok(diffs, vm, odd=False).all():
                res.fail(f"some solution differs from the reference by an odd-degree set: {_desc(g)}")
    return res


def suite_cycles(limit_n: int = 8, chunk: int = 64, block: int = 1 << 15) -> SuiteResult:
    """A solution passes the cycle criterion iff it is of minimum size.

    The predicate is evaluated for every solution of every graph; failing
    solutions drop out as soon as one violating cycle is seen.
    """
    res = SuiteResult("cycles")
    for g in even_connected_exhaustive(limit_n):
        res.instances += 1
        sols = oracle.ev_solution_masks(g, mode="gf2", nullity_cap=CYCLE_NULLITY_CAP, canonical=False)
        sizes = np.bitwise_count(sols)
        optimum = sizes.min()
        cycles = sorted(enumerate_cycles(g), key=len)
        cmask = np.array([sum(1 << e for e in c) for c in cycles], dtype=np.int64)
        clen = np.array([len(c) for c in cycles], dtype=np.int64)
        alive = np.concatenate([
            _survivors(sols[lo:lo + block], cmask, clen, chunk) + lo
            for lo in range(0, len(sols), block)
        ])
        passes = np.zeros(len(sols), dtype=bool)
        passes[alive] = True
        optimal = sizes == optimum
        if not np.array_equal(passes, optimal):
            wrong = np.flatnonzero(passes != optimal)[:3]
            res.fail(f"criterion disagrees with optimality on {len(np.flatnonzero(passes != optimal))} "
                     f"solutions (e.g. {[hex(int(sols[k])) for k in wrong]}): {_desc(g)}")
    return res


def _survivors(sols: np.ndarray, cmask: np.ndarray, clen: np.ndarray, chunk: int) -> np.ndarray:
    # indices of solutions with no cycle C where 2|S & C| > |C|
    alive = np.arange(len(sols))
    for start in range(0, len(cmask), chunk):
        if len(alive) == 0:
            break
        cm = cmask[start:start + chunk]
        cl = clen[start:start + chunk]
        hits = np.bitwise_count(sols[alive][:, None] & cm[None, :])
        alive = alive[~(2 * hits > cl[None, :]).any(axis=1)]
    return alive


def random_weighted_graphs(count: int = 500, max_n: int = 10, max_w: int = 9, seed: int = 0) -> Iterator[WeightedGraph]:
    rng = random.Random(seed)
    for _ in range(count):
        g = random_graph(rng.randint(1, max_n), rng.random(), rng.randrange(2**32))
        yield WeightedGraph(g, tuple(rng.randint(0, max_w) for _ in range(g.m)))


def suite_matching(count: int = 500, max_n: int = 10, seed: int = 0) -> SuiteResult:
    res = SuiteResult("matching")
    for wg in random_weighted_graphs(count, max_n, seed=seed):
        res.instances += 1
        got = min_weight_perfect_matching(wg)
        want = brute_min_weight_pm(wg)
        if (got is None) != (want is None):
            res.fail(f"existence differs (engine {got is not None}, brute {want is not None}): {_desc(wg.base)}")
            continue
        if got is None:
            continue
        if got.total_weight != want.total_weight:
            res.fail(f"weight {got.total_weight} != brute {want.total_weight}: {_desc(wg.base)}")
        covered = sorted(v for e in got.edges for v in wg.base.edges[e])
        if covered != list(range(wg.n)):
            res.fail(f"engine matching is not perfect: {_desc(wg.base)}")
    return res


def _ev_suite(name: str, check: Callable[[list[EvRecord]], SuiteResult]):
    def run(limit_n: int = 8, random_count: int = 500, seed: int = 0) -> SuiteResult:
        return check(ev_records(limit_n, random_count, seed))
    run.__name__ = f"suite_{name}"
    return run


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "reduction": _ev_suite("reduction", lambda rs: _merge("reduction", check_reduction(rs), check_weight_relation(rs))),
    "bounds": _ev_suite("bounds", check_bounds),
    "approx": _ev_suite("approx", check_approximation),
    "structure": _ev_suite("structure", check_structure),
    "existence": suite_existence,
    "uniqueness": suite_uniqueness,
    "ve": suite_ve,
    "vv": suite_vv,
    "ee": suite_ee,
    "clawfree": suite_clawfree,
    "symdiff": suite_symdiff,
    "cycles": suite_cycles,
    "matching": suite_matching,
}


def _merge(name: str, *parts: SuiteResult) -> SuiteResult:
    out = SuiteResult(name, instances=max(p.instances for p in parts))
    for p in parts:
        out.failures.extend(p.failures)
    return out
