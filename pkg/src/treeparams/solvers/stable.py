"""Exact maximum (weighted) stable set by branch and bound on bitmasks."""

from __future__ import annotations

import sys
from typing import Sequence

from ..graph import bits


def components(adj: Sequence[int], mask: int) -> list[int]:
    """Connected components of the subgraph induced by ``mask``, as bitmasks."""
    comps = []
    while mask:
        low = mask & -mask
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for x in bits(frontier):
                nxt |= adj[x]
            frontier = nxt & mask & ~comp
            comp |= frontier
        comps.append(comp)
        mask &= ~comp
    return comps


class StableSetSolver:
    """Maximum-weight stable set on a fixed graph, memoised by candidate mask.

    The bound is a greedy clique cover: vertices are taken by decreasing
    weight and each clique contributes the weight of its first member.
    Disconnected candidate sets are solved component by component.
    """

    def __init__(self, adj: Sequence[int], weights: Sequence[int] | None = None):
        self.adj = tuple(adj)
        n = len(self.adj)
        self.w = tuple(weights) if weights is not None else (1,) * n
        if any(x < 0 for x in self.w):
            raise ValueError("weights must be non-negative")
        self._order = sorted(range(n), key=lambda v: (-self.w[v], v))
        self._memo: dict[int, tuple[int, int]] = {}

    def solve(self, mask: int) -> tuple[int, int]:
        """Return ``(weight, stable set mask)`` of an optimum inside ``mask``."""
        limit = sys.getrecursionlimit()
        need = 4 * mask.bit_count() + 200
        if need > limit:
            sys.setrecursionlimit(need)
        try:
            val, sol = self._solve(mask, -1)
        finally:
            sys.setrecursionlimit(limit)
        return val, sol

    def _bound(self, cand: int) -> int:
        cliques: list[int] = []
        tops: list[int] = []
        adj, w = self.adj, self.w
        for v in self._order:
            if not cand >> v & 1:
                continue
            for i, c in enumerate(cliques):
                if c & ~adj[v] == 0:
                    cliques[i] = c | 1 << v
                    break
            else:
                cliques.append(1 << v)
                tops.append(w[v])
        return sum(tops)

    def _solve(self, cand: int, floor: int) -> tuple[int, int | None]:
        # Returns a stable set inside cand (or None); it is optimal whenever the
        # optimum exceeds floor.
        if cand == 0:
            return 0, 0
        hit = self._memo.get(cand)
        if hit is not None:
            return hit
        adj, w = self.adj, self.w
        if cand & (cand - 1) == 0:
            v = cand.bit_length() - 1
            return w[v], cand
        if self._bound(cand) <= floor:
            return floor, None

        comps = components(adj, cand)
        if len(comps) > 1:
            total, sol = 0, 0
            for c in comps:
                val, s = self._solve(c, -1)
                total += val
                sol |= s
            self._remember(cand, total, sol)
            return total, sol

        # branch on a vertex of maximum degree inside cand
        v = max(bits(cand), key=lambda x: ((adj[x] & cand).bit_count(), -x))
        best_val, best_set = floor, None
        inc_val, inc_set = self._solve(cand & ~adj[v] & ~(1 << v), floor - w[v])
        if inc_set is not None and inc_val + w[v] > best_val:
            best_val, best_set = inc_val + w[v], inc_set | 1 << v
        exc_val, exc_set = self._solve(cand & ~(1 << v), best_val)
        if exc_set is not None and exc_val > best_val:
            best_val, best_set = exc_val, exc_set
        if best_set is not None and best_val > floor:
            self._remember(cand, best_val, best_set)
            return best_val, best_set
        return floor, None

    def _remember(self, cand: int, val: int, sol: int) -> None:
        if len(self._memo) > 2_000_000:
            self._memo.clear()
        self._memo[cand] = (val, sol)


def max_weight_stable_set(adj: Sequence[int], mask: int, weights: Sequence[int] | None = None) -> tuple[int, int]:
    return StableSetSolver(adj, weights).solve(mask)


def brute_force_max_weight_stable_set(adj: Sequence[int], weights: Sequence[int] | None = None) -> int:
    """Exhaustive oracle over all vertex subsets; only for tiny graphs."""
    n = len(adj)
    w = weights if weights is not None else [1] * n
    best = 0
    for s in range(1 << n):
        if all(not (adj[v] & s) for v in bits(s)):
            best = max(best, sum(w[v] for v in bits(s)))
    return best
