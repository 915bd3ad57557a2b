"""Uniform solve/verify entry points and the machine-readable report."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional

from .gf2_linalg import DEFAULT_NULLITY_CAP
from .graph_core import Graph, components
from .lamp_ev import min_ev, solve_ev, verify_ev
from .lamp_ve import solve_ve, verify_ve
from .lamp_vv_ee import min_ee, min_vv, solve_ee, solve_vv, verify_ee, verify_vv

PROBLEMS = ("vv", "ve", "ev", "ee")
VERTEX_PROBLEMS = ("vv", "ve")


@dataclass
class SolutionReport:
    problem: str
    n: int
    m: int
    feasible: bool
    size: Optional[int]
    witness: list[int]
    optimal: bool
    bounds: dict = field(default_factory=lambda: {"lower": None, "upper": None})
    diagnostics: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    def to_text(self) -> str:
        if not self.feasible:
            reason = self.diagnostics.get("reason", "infeasible")
            return f"problem {self.problem}: infeasible ({reason})\n"
        kind = "vertices" if self.problem in VERTEX_PROBLEMS else "edges"
        lines = [
            f"problem {self.problem}: feasible",
            f"size {self.size}{' (optimal)' if self.optimal else ''}",
            f"{kind} " + " ".join(map(str, self.witness)),
        ]
        if self.bounds.get("lower") is not None:
            lines.append(f"bounds {self.bounds['lower']} {self.bounds['upper']}")
        for key in sorted(self.diagnostics):
            lines.append(f"{key} {self.diagnostics[key]}")
        return "\n".join(lines) + "\n"


def _ev_bounds(g: Graph) -> dict:
    comps = components(g)
    return {
        "lower": sum(len(c) // 2 for c in comps),
        "upper": sum(len(c) - 1 for c in comps),
    }


def solve(g: Graph, problem: str, minimum: bool = False, nullity_cap: int = DEFAULT_NULLITY_CAP) -> SolutionReport:
    if problem not in PROBLEMS:
        raise ValueError(f"unknown problem {problem!r}")
    base = dict(problem=problem, n=g.n, m=g.m)

    if problem == "ve":
        res = solve_ve(g)
        if res is None:
            return SolutionReport(**base, feasible=False, size=None, witness=[], optimal=False,
                                  diagnostics={"reason": "not bipartite"})
        wit = res.chosen_min if minimum else frozenset().union(*(u for u, _ in res.pairs))
        diag = {"components": len(res.pairs)}
        if res.degenerate:
            diag["degenerate"] = "no edges; every vertex set is a solution"
        return SolutionReport(**base, feasible=True, size=len(wit), witness=sorted(wit),
                              optimal=minimum, diagnostics=diag)

    if problem == "ev":
        res = min_ev(g) if minimum else solve_ev(g)
        if res is None:
            return SolutionReport(**base, feasible=False, size=None, witness=[], optimal=False,
                                  bounds={"lower": None, "upper": None},
                                  diagnostics={"reason": "a component has odd order"})
        diag: dict = {}
        if res.matching_weight is not None:
            diag["matching_weight"] = res.matching_weight
        if minimum:
            diag["forest_components"] = len(res.forest_components)
        return SolutionReport(**base, feasible=True, size=res.size, witness=sorted(res.edges),
                              optimal=res.is_optimal, bounds=_ev_bounds(g), diagnostics=diag)

    # vv and ee are always solvable
    solver, minimizer = (solve_vv, min_vv) if problem == "vv" else (solve_ee, min_ee)
    diag = {}
    optimal = False
    wit = None
    if minimum:
        wit = minimizer(g, nullity_cap)
        if wit is None:
            diag["note"] = f"nullity exceeds cap {nullity_cap}; returning an unminimised solution"
        else:
            optimal = True
        if problem == "ee":
            diag["experimental"] = "minimum via bounded enumeration on the line graph"
    if wit is None:
        wit = solver(g)
    return SolutionReport(**base, feasible=True, size=len(wit), witness=sorted(wit),
                          optimal=optimal, diagnostics=diag)


def verify(g: Graph, problem: str, witness: Iterable[int]) -> bool:
    checker = {"vv": verify_vv, "ve": verify_ve, "ev": verify_ev, "ee": verify_ee}[problem]
    return checker(g, list(witness))
