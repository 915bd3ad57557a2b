"""Dense GF(2) linear algebra on int-packed bit rows.

Bit ``j`` of a row integer is column ``j``; a vector of length ``k`` is an
int whose bit ``i`` holds component ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .graph_core import Graph

DEFAULT_NULLITY_CAP = 20


@dataclass(frozen=True)
class Gf2Matrix:
    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != self.rows:
            raise ValueError("row count does not match bit rows")
        limit = 1 << self.cols
        if any(r < 0 or r >= limit for r in self.bits):
            raise ValueError("row has bits beyond the column count")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Gf2Matrix":
        cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(pack(r) for r in rows))

    def to_rows(self) -> list[list[int]]:
        return [unpack(r, self.cols) for r in self.bits]

    def mul(self, x: int) -> int:
        """Matrix-vector product A·x."""
        out = 0
        for i, row in enumerate(self.bits):
            if (row & x).bit_count() & 1:
                out |= 1 << i
        return out

    def transpose(self) -> "Gf2Matrix":
        t = [0] * self.cols
        for i, row in enumerate(self.bits):
            while row:
                low = row & -row
                t[low.bit_length() - 1] |= 1 << i
                row ^= low
        return Gf2Matrix(self.cols, self.rows, tuple(t))

    def to_text(self) -> str:
        return "\n".join("".join(map(str, r)) for r in self.to_rows())


def pack(bits: Iterable[int]) -> int:
    out = 0
    for i, b in enumerate(bits):
        if b & 1:
            out |= 1 << i
    return out


def unpack(x: int, length: int) -> list[int]:
    return [(x >> i) & 1 for i in range(length)]


def support(x: int) -> list[int]:
    """Indices of the set bits of x, ascending."""
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


@dataclass(frozen=True)
class Gf2Solution:
    particular: int
    nullspace: tuple[int, ...]
    consistent: bool
    rank: int
    cols: int

    @property
    def nullity(self) -> int:
        return self.cols - self.rank

    def vectors(self) -> Iterator[int]:
        """Every solution, in Gray-code order over the nullspace basis."""
        if not self.consistent:
            return
        x = self.particular
        yield x
        basis = self.nullspace
        for i in range(1, 1 << len(basis)):
            x ^= basis[(i & -i).bit_length() - 1]
            yield x


def solve(a: Gf2Matrix, b: int | Sequence[int]) -> Gf2Solution:
    """Solve A·x = b by Gauss-Jordan elimination.

    The nullspace basis has one vector per free column: the free column set
    and the pivot columns it forces.
    """
    if not isinstance(b, int):
        if len(b) != a.rows:
            raise ValueError(f"rhs has length {len(b)}, matrix has {a.rows} rows")
        b = pack(b)
    elif b >> a.rows:
        raise ValueError("rhs has bits beyond the row count")

    cols = a.cols
    # augment: rhs lives in bit `cols`
    rhs_bit = 1 << cols
    work = [row | (rhs_bit if (b >> i) & 1 else 0) for i, row in enumerate(a.bits)]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        mask = 1 << c
        p = next((i for i in range(r, len(work)) if work[i] & mask), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        prow = work[r]
        for i in range(len(work)):
            if i != r and work[i] & mask:
                work[i] ^= prow
        pivots.append(c)
        r += 1
        if r == len(work):
            break

    rank = len(pivots)
    consistent = all(row != rhs_bit for row in work[rank:])
    particular = 0
    if consistent:
        for i, c in enumerate(pivots):
            if work[i] & rhs_bit:
                particular |= 1 << c

    pivot_set = set(pivots)
    basis = []
    for f in range(cols):
        if f in pivot_set:
            continue
        v = 1 << f
        for i, c in enumerate(pivots):
            if (work[i] >> f) & 1:
                v |= 1 << c
        basis.append(v)
    return Gf2Solution(particular if consistent else 0, tuple(basis), consistent, rank, cols)


def _lex_key(x: int, length: int) -> int:
    # component 0 most significant: smaller key = lexicographically smaller vector
    return int(format(x, f"0{length}b")[::-1], 2) if length else 0


def min_weight_solution(sol: Gf2Solution, nullity_cap: int = DEFAULT_NULLITY_CAP) -> Optional[int]:
    """Minimum Hamming weight solution, ties to the lexicographically smallest.

    Returns None when the nullity exceeds ``nullity_cap``.
    """
    if not sol.consistent:
        raise ValueError("system is inconsistent")
    if sol.nullity > nullity_cap:
        return None
    best = None
    best_w = sol.cols + 1
    for x in sol.vectors():
        w = x.bit_count()
        if w < best_w:
            best, best_w = x, w
        elif w == best_w and _lex_key(x, sol.cols) < _lex_key(best, sol.cols):
            best = x
    return best


def closed_neighborhood_matrix(g: Graph) -> Gf2Matrix:
    rows = []
    for v in range(g.n):
        r = 1 << v
        for u in g.adj[v]:
            r |= 1 << u
        rows.append(r)
    return Gf2Matrix(g.n, g.n, tuple(rows))


def incidence_matrix(g: Graph) -> Gf2Matrix:
    """Vertex-by-edge incidence matrix (n rows, m columns)."""
    rows = []
    for v in range(g.n):
        r = 0
        for e in g.incident[v]:
            r |= 1 << e
        rows.append(r)
    return Gf2Matrix(g.n, g.m, tuple(rows))
