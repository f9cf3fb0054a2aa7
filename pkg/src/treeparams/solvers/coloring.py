"""Exact chromatic number by DSATUR branch and bound."""

from __future__ import annotations

from typing import Sequence

from ..graph import bits


def greedy_clique(adj: Sequence[int], mask: int) -> int:
    """A maximal clique inside ``mask`` grown greedily from high-degree vertices."""
    best = 0
    for start in sorted(bits(mask), key=lambda v: -(adj[v] & mask).bit_count())[:8]:
        clique = 1 << start
        cand = adj[start] & mask
        while cand:
            v = max(bits(cand), key=lambda x: (adj[x] & cand).bit_count())
            clique |= 1 << v
            cand &= adj[v]
        if clique.bit_count() > best.bit_count():
            best = clique
    return best


def two_coloring(adj: Sequence[int], mask: int) -> dict[int, int] | None:
    color: dict[int, int] = {}
    for s in bits(mask):
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in bits(adj[x] & mask):
                if y not in color:
                    color[y] = 1 - color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    return None
    return color


def _dsatur_greedy(adj: Sequence[int], mask: int) -> dict[int, int]:
    color: dict[int, int] = {}
    sat = {v: 0 for v in bits(mask)}  # bitmask of neighbour colours
    uncolored = mask
    while uncolored:
        v = max(bits(uncolored), key=lambda x: (sat[x].bit_count(), (adj[x] & uncolored).bit_count(), -x))
        c = 0
        while sat[v] >> c & 1:
            c += 1
        color[v] = c
        uncolored &= ~(1 << v)
        for u in bits(adj[v] & uncolored):
            sat[u] |= 1 << c
    return color


def _k_color(adj: Sequence[int], mask: int, k: int, seed_clique: int) -> dict[int, int] | None:
    """Backtracking DSATUR search for a proper ``k``-colouring, or ``None``."""
    color: dict[int, int] = {}
    sat = {v: 0 for v in bits(mask)}
    # colour the seed clique first: fixes colour symmetry
    uncolored = mask
    for c, v in enumerate(bits(seed_clique)):
        if c >= k:
            return None
        color[v] = c
        uncolored &= ~(1 << v)
        for u in bits(adj[v] & mask):
            sat[u] |= 1 << c
    full = (1 << k) - 1

    def rec(uncolored: int, used: int) -> bool:
        if not uncolored:
            return True
        v = max(bits(uncolored), key=lambda x: (sat[x].bit_count(), (adj[x] & uncolored).bit_count(), -x))
        free = full & ~sat[v]
        if not free:
            return False
        rest = uncolored & ~(1 << v)
        nbrs = list(bits(adj[v] & rest))
        for c in bits(free):
            # unused colours are interchangeable: try only the first one
            if c > used + 1:
                break
            color[v] = c
            saved = [(u, sat[u]) for u in nbrs]
            for u in nbrs:
                sat[u] |= 1 << c
            if rec(rest, max(used, c)):
                return True
            for u, s in saved:
                sat[u] = s
            del color[v]
        return False

    used = seed_clique.bit_count() - 1
    if rec(uncolored, used):
        return color
    return None


def chromatic_number_mask(adj: Sequence[int], mask: int) -> tuple[int, dict[int, int]]:
    """Return ``(chi, colouring)`` for the subgraph induced by ``mask``."""
    if mask == 0:
        return 0, {}
    if all(not (adj[v] & mask) for v in bits(mask)):
        return 1, {v: 0 for v in bits(mask)}
    two = two_coloring(adj, mask)
    if two is not None:
        return 2, two
    clique = greedy_clique(adj, mask)
    best = _dsatur_greedy(adj, mask)
    ub = max(best.values()) + 1
    lb = max(clique.bit_count(), 3)
    while ub > lb:
        attempt = _k_color(adj, mask, ub - 1, clique)
        if attempt is None:
            break
        best, ub = attempt, ub - 1
    return ub, best
