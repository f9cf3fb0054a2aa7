"""Minimal separators and potential maximal cliques (PMCs) on bitmask graphs.

Everything here works inside a ``universe`` mask that must induce a connected
subgraph.  Minimal separators are generated by the closure procedure of
Berry, Bordat and Cogis; PMCs by the incremental vertex-by-vertex procedure
of Bouchitte and Todinca, each candidate being confirmed by the PMC test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..graph import bits
from .stable import components


def boundary(adj: Sequence[int], comp: int, universe: int) -> int:
    """``N(comp)`` inside ``universe``."""
    nb = 0
    for x in bits(comp):
        nb |= adj[x]
    return nb & universe & ~comp


def minimal_separators(adj: Sequence[int], universe: int) -> set[int]:
    seps: set[int] = set()
    queue: list[int] = []

    def push_from(removed: int) -> None:
        for c in components(adj, universe & ~removed):
            s = boundary(adj, c, universe)
            if s and s not in seps:
                seps.add(s)
                queue.append(s)

    for v in bits(universe):
        push_from((adj[v] | 1 << v) & universe)
    while queue:
        s = queue.pop()
        for x in bits(s):
            push_from(s | (adj[x] & universe))
    return seps


def full_components(adj: Sequence[int], sep: int, universe: int) -> list[int]:
    return [c for c in components(adj, universe & ~sep) if boundary(adj, c, universe) == sep]


def is_pmc(adj: Sequence[int], universe: int, omega: int) -> bool:
    """PMC test: no full component, and every non-adjacent pair of ``omega``
    lies in the neighbourhood of a common component of ``universe - omega``."""
    if omega == 0 or omega & ~universe:
        return False
    seps = [boundary(adj, c, universe) for c in components(adj, universe & ~omega)]
    if omega in seps:
        return False
    for x in bits(omega):
        need = omega & ~adj[x] & ~(1 << x)
        if not need:
            continue
        cover = 0
        for s in seps:
            if s >> x & 1:
                cover |= s
        if need & ~cover:
            return False
    return True


def connected_order(adj: Sequence[int], universe: int) -> list[int]:
    """BFS order from the lowest vertex; every prefix induces a connected graph."""
    start = universe & -universe
    order = [start.bit_length() - 1]
    seen = start
    i = 0
    while i < len(order):
        for y in bits(adj[order[i]] & universe & ~seen):
            seen |= 1 << y
            order.append(y)
        i += 1
    if seen != universe:
        raise ValueError("universe does not induce a connected graph")
    return order


def potential_maximal_cliques(adj: Sequence[int], universe: int) -> set[int]:
    """All PMCs of the connected graph induced by ``universe``."""
    if not universe:
        return set()
    order = connected_order(adj, universe)
    prefix = 1 << order[0]
    pmcs = {prefix}
    prev_seps: set[int] = set()
    for a in order[1:]:
        abit = 1 << a
        cur = prefix | abit
        cur_seps = minimal_separators(adj, cur)
        tested: dict[int, bool] = {}

        def check(cand: int) -> bool:
            r = tested.get(cand)
            if r is None:
                r = tested[cand] = is_pmc(adj, cur, cand)
            return r

        found: set[int] = set()
        for om in pmcs:
            if check(om):
                found.add(om)
            elif check(om | abit):
                found.add(om | abit)
        for s in cur_seps:
            if check(s | abit):
                found.add(s | abit)
            if s & abit:
                continue
            for c in full_components(adj, s, cur):
                for t in prev_seps:
                    part = c & t
                    if part and check(s | part):
                        found.add(s | part)
        pmcs = found
        prev_seps = cur_seps
        prefix = cur
    return pmcs


@dataclass(frozen=True)
class PmcCatalog:
    """Minimal separators and PMCs of one connected vertex set, as bitmasks."""

    universe: int
    separators: tuple[int, ...]
    pmcs: tuple[int, ...]

    @classmethod
    def build(cls, adj: Sequence[int], universe: int) -> "PmcCatalog":
        seps = minimal_separators(adj, universe)
        pmcs = potential_maximal_cliques(adj, universe)
        key = lambda m: tuple(bits(m))
        return cls(universe, tuple(sorted(seps, key=key)), tuple(sorted(pmcs, key=key)))


def brute_force_pmcs(adj: Sequence[int], universe: int) -> set[int]:
    """Definition check: the maximal cliques of all minimal triangulations.

    Enumerates every fill-in of the non-edges of ``universe`` (tiny graphs
    only).  A chordal fill is minimal iff dropping any single fill edge
    leaves a non-chordal graph.
    """
    from .brute import chordal_supergraphs

    verts = list(bits(universe))
    pos = {v: i for i, v in enumerate(verts)}
    local = [0] * len(verts)
    for v in verts:
        for u in bits(adj[v] & universe):
            local[pos[v]] |= 1 << pos[u]
    triangulations = dict(chordal_supergraphs(local))
    out: set[int] = set()
    for fill, cliques in triangulations.items():
        if any((fill & ~(1 << e)) in triangulations for e in bits(fill)):
            continue
        for c in cliques:
            out.add(sum(1 << verts[i] for i in bits(c)))
    return out


def brute_force_is_pmc(adj: Sequence[int], universe: int, omega: int) -> bool:
    return omega in brute_force_pmcs(adj, universe)
