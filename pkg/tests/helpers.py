"""Shared constructions and brute-force oracles for the test suite."""

from quadtour.core import Tournament, iter_bits, validate


def three_cycle() -> Tournament:
    # 0 -> 1 -> 2 -> 0
    return validate(3, [0b010, 0b100, 0b001])


def transitive_triple() -> Tournament:
    # 0 beats 1 and 2, 1 beats 2
    return validate(3, [0b110, 0b100, 0b000])


def single_arc() -> Tournament:
    return validate(2, [0b10, 0b00])


def reachable_from(t: Tournament, start: int) -> int:
    """Bitmask of vertices reachable from start by a directed path."""
    seen = 1 << start
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for w in iter_bits(t.rows[v] & ~seen & t.full_mask):
            seen |= 1 << w
            frontier.append(w)
    return seen


def is_strongly_connected(t: Tournament) -> bool:
    return all(reachable_from(t, v) == t.full_mask for v in range(t.n))


def brute_out_quadrangular(t: Tournament) -> bool:
    """Direct definition via explicit vertex sets, independent of bit tricks."""
    outs = [set(iter_bits(t.rows[v])) for v in range(t.n)]
    return all(
        len(outs[u] & outs[v]) != 1
        for u in range(t.n)
        for v in range(u + 1, t.n)
    )


def brute_in_quadrangular(t: Tournament) -> bool:
    ins = [
        {u for u in range(t.n) if u != v and (t.rows[u] >> v) & 1}
        for v in range(t.n)
    ]
    return all(
        len(ins[u] & ins[v]) != 1
        for u in range(t.n)
        for v in range(u + 1, t.n)
    )


def brute_quadrangular(t: Tournament) -> bool:
    return brute_out_quadrangular(t) and brute_in_quadrangular(t)


def brute_failing_pairs(t: Tournament, side: str) -> list:
    """All pairs with exactly one common out-/in-neighbour, lexicographic."""
    if side == "out":
        sets = [set(iter_bits(t.rows[v])) for v in range(t.n)]
    else:
        sets = [
            {u for u in range(t.n) if u != v and (t.rows[u] >> v) & 1}
            for v in range(t.n)
        ]
    return [
        (u, v)
        for u in range(t.n)
        for v in range(u + 1, t.n)
        if len(sets[u] & sets[v]) == 1
    ]


def brute_gamma(t: Tournament) -> int:
    """Domination number by explicit subset enumeration over vertex sets."""
    from itertools import combinations

    everyone = set(range(t.n))
    for size in range(1, t.n + 1):
        for combo in combinations(range(t.n), size):
            covered = set(combo)
            for v in combo:
                covered |= set(iter_bits(t.rows[v]))
            if covered == everyone:
                return size
    raise AssertionError("unreachable")
