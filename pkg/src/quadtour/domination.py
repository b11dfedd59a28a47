"""Dominating sets, domination number, domination and competition graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Tuple

from .core import Tournament
from .errors import SizeLimitExceeded, UnsupportedK

GAMMA_MAX_N = 24


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected loopless graph on the tournament's vertices."""

    n: int
    edges: frozenset  # unordered pairs stored as (u, v) with u < v

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


@dataclass(frozen=True)
class DominationInfo:
    gamma: int
    min_set: tuple  # lexicographically smallest minimum dominating set
    pairs: tuple  # all dominant pairs, lexicographic


def _closed_union(t: Tournament, vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= t.closed_out_mask(v)
    return mask


def dominates(t: Tournament, s: Iterable[int]) -> bool:
    """True iff every vertex is in s or beaten by some member of s."""
    members = list(s)
    for v in members:
        t.check_vertex(v)
    return _closed_union(t, members) == t.full_mask


def dominant_pairs(t: Tournament) -> tuple:
    """All pairs {x, y} dominating the tournament, in lexicographic order."""
    full = t.full_mask
    out = []
    for u in range(t.n):
        cu = t.closed_out_mask(u)
        for v in range(u + 1, t.n):
            if cu | t.closed_out_mask(v) == full:
                out.append((u, v))
    return tuple(out)


def domination_number(t: Tournament, *, max_n: int = GAMMA_MAX_N) -> DominationInfo:
    """Exact domination number by iterative deepening over subset sizes."""
    if t.n > max_n:
        raise SizeLimitExceeded(f"domination number refused for n={t.n} > {max_n}")
    full = t.full_mask
    pairs = dominant_pairs(t) if t.n >= 2 else ()
    for size in range(1, t.n + 1):
        for combo in combinations(range(t.n), size):
            if _closed_union(t, combo) == full:
                return DominationInfo(size, combo, pairs)
    raise AssertionError("the full vertex set always dominates")


def gamma_exceeds(t: Tournament, k: int) -> bool:
    """True iff no dominating set of size <= k exists, for k in {1, 2, 3}."""
    if k not in (1, 2, 3):
        raise UnsupportedK(f"k must be 1, 2 or 3, got {k}")
    full = t.full_mask
    closed = [t.closed_out_mask(v) for v in range(t.n)]
    for u in range(t.n):
        if closed[u] == full:
            return False
    if k == 1:
        return True
    for u in range(t.n):
        for v in range(u + 1, t.n):
            if closed[u] | closed[v] == full:
                return False
    if k == 2:
        return True
    for u in range(t.n):
        for v in range(u + 1, t.n):
            uv = closed[u] | closed[v]
            for w in range(v + 1, t.n):
                if uv | closed[w] == full:
                    return False
    return True


def domination_graph(t: Tournament) -> SimpleGraph:
    """Graph whose edges are exactly the dominant pairs of t."""
    return SimpleGraph(t.n, frozenset(dominant_pairs(t)))


def competition_graph(t: Tournament) -> SimpleGraph:
    """Edge {x, y} iff x and y share at least one common out-neighbour."""
    edges = set()
    for u in range(t.n):
        ou = t.out_mask(u)
        for v in range(u + 1, t.n):
            if ou & t.out_mask(v):
                edges.add((u, v))
    return SimpleGraph(t.n, frozenset(edges))
