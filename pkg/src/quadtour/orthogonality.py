"""Combinatorial orthogonality on 0/1 patterns and quadrangularity predicates.

Two vectors are combinatorially orthogonal when their supports overlap in a
number of positions different from 1.  A digraph whose adjacency matrix is
the pattern of a combinatorially orthogonal matrix is quadrangular:
|O(u) n O(v)| != 1 and |I(u) n I(v)| != 1 for every distinct pair u, v.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

from .core import Tournament, iter_bits
from .errors import NotSquare


@dataclass(frozen=True)
class BinaryPattern:
    """Rectangular 0/1 matrix, one column-bitmask per row."""

    rows: int
    cols: int
    bits: tuple  # bits[r] has bit c set iff entry (r, c) is 1

    def transpose(self) -> "BinaryPattern":
        cols = []
        for c in range(self.cols):
            col = 0
            for r in range(self.rows):
                if (self.bits[r] >> c) & 1:
                    col |= 1 << r
            cols.append(col)
        return BinaryPattern(self.cols, self.rows, tuple(cols))

    def nnz(self) -> int:
        return sum(row.bit_count() for row in self.bits)


def pattern_of(matrix) -> BinaryPattern:
    """0/1 pattern of a real matrix: 1 exactly where the entry is nonzero."""
    rows = []
    width = None
    for row in matrix:
        entries = list(row)
        if width is None:
            width = len(entries)
        bits = 0
        for c, entry in enumerate(entries):
            if entry != 0:
                bits |= 1 << c
        rows.append(bits)
    return BinaryPattern(len(rows), width or 0, tuple(rows))


def adjacency_pattern(t: Tournament) -> BinaryPattern:
    """Adjacency matrix of a tournament as a BinaryPattern."""
    return BinaryPattern(t.n, t.n, t.rows)


def comb_row_orthogonal(p: BinaryPattern) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """True iff every two distinct rows overlap in != 1 positions.

    On failure returns the lexicographically smallest offending row pair.
    """
    for i in range(p.rows):
        for j in range(i + 1, p.rows):
            if (p.bits[i] & p.bits[j]).bit_count() == 1:
                return False, (i, j)
    return True, None


def comb_orthogonal(p: BinaryPattern) -> bool:
    """True iff both the pattern and its transpose are row-orthogonal."""
    if p.rows != p.cols:
        raise NotSquare(f"pattern is {p.rows}x{p.cols}")
    ok, _ = comb_row_orthogonal(p)
    if not ok:
        return False
    ok, _ = comb_row_orthogonal(p.transpose())
    return ok


class Witness(NamedTuple):
    u: int
    v: int
    common: tuple


@dataclass(frozen=True)
class QuadReport:
    """Verdict for one side of the quadrangularity check.

    When the verdict is false, witness holds the lexicographically smallest
    pair (u, v) whose common out- or in-neighbourhood has size exactly 1.
    """

    verdict: bool
    side: str  # "out" or "in"
    witness: Optional[Witness]


def _scan_side(t: Tournament, side: str) -> QuadReport:
    mask = t.out_mask if side == "out" else t.in_mask
    for u in range(t.n):
        mu = mask(u)
        for v in range(u + 1, t.n):
            common = mu & mask(v)
            if common.bit_count() == 1:
                return QuadReport(False, side, Witness(u, v, tuple(iter_bits(common))))
    return QuadReport(True, side, None)


def quadrangularity(t: Tournament, side: str = "both"):
    """Quadrangularity check; returns a QuadReport, or a pair for side="both"."""
    if side == "out":
        return _scan_side(t, "out")
    if side == "in":
        return _scan_side(t, "in")
    if side == "both":
        return _scan_side(t, "out"), _scan_side(t, "in")
    raise ValueError(f"side must be out, in or both, got {side!r}")


def is_out_quadrangular(t: Tournament) -> bool:
    return _scan_side(t, "out").verdict


def is_in_quadrangular(t: Tournament) -> bool:
    return _scan_side(t, "in").verdict


def is_quadrangular(t: Tournament) -> bool:
    return is_out_quadrangular(t) and is_in_quadrangular(t)


def closed_union_in_quad(t: Tournament) -> bool:
    """In-quadrangularity via closed outsets: |O[u] u O[v]| != n-1 for all pairs."""
    n = t.n
    for u in range(n):
        cu = t.closed_out_mask(u)
        for v in range(u + 1, n):
            if (cu | t.closed_out_mask(v)).bit_count() == n - 1:
                return False
    return True


class NnzReport(NamedTuple):
    nnz: int
    bound: int
    meets: bool


def nnz_report(p: BinaryPattern) -> NnzReport:
    """Nonzero count against the 4n-4 lower bound for fully indecomposable
    combinatorially orthogonal patterns (informational; indecomposability is
    not tested here)."""
    if p.rows != p.cols:
        raise NotSquare(f"pattern is {p.rows}x{p.cols}")
    if p.rows < 2:
        raise NotSquare(f"bound needs n >= 2, got n={p.rows}")
    nnz = p.nnz()
    bound = 4 * p.rows - 4
    return NnzReport(nnz, bound, nnz >= bound)
