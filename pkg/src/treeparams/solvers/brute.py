"""Independent oracles: exhaustive enumeration over chordal supergraphs.

Nothing here uses separators or PMCs, so these routines can cross-check the
dynamic program in :mod:`treeparams.solvers.treeparam`.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from ..errors import BudgetExceeded
from ..graph import Graph, bits
from ..treedec import BagMeasure, TreeDecomposition

BRUTE_FORCE_MAX_N = 8


def chordal_maximal_cliques(adj: Sequence[int]) -> frozenset[int] | None:
    """Maximal cliques of a chordal graph, or ``None`` if it is not chordal.

    Uses repeated elimination of simplicial vertices.
    """
    n = len(adj)
    remaining = (1 << n) - 1
    cands = []
    while remaining:
        for v in bits(remaining):
            nb = adj[v] & remaining
            if all(nb & ~adj[u] & ~(1 << u) == 0 for u in bits(nb)):
                cands.append(nb | 1 << v)
                remaining &= ~(1 << v)
                break
        else:
            return None
    return frozenset(c for c in cands if not any(c != d and c & d == c for d in cands))


def chordal_supergraphs(adj: Sequence[int]) -> Iterator[tuple[int, frozenset[int]]]:
    """Yield ``(fill, maximal cliques)`` for every chordal supergraph on the same vertices.

    ``fill`` is a bitmask over the non-edges ``(u, v)``, ``u < v``, in
    lexicographic order.
    """
    n = len(adj)
    nonedges = [(u, v) for u in range(n) for v in range(u + 1, n) if not adj[u] >> v & 1]
    for fill in range(1 << len(nonedges)):
        a = list(adj)
        for i in bits(fill):
            u, v = nonedges[i]
            a[u] |= 1 << v
            a[v] |= 1 << u
        cliques = chordal_maximal_cliques(a)
        if cliques is not None:
            yield fill, cliques


def clique_tree(host: Graph, cliques: Sequence[int]) -> TreeDecomposition:
    """Clique tree as a maximum-weight spanning tree of the clique intersection graph."""
    cl = sorted(cliques, key=lambda m: tuple(bits(m)))
    k = len(cl)
    pairs = sorted(
        ((-(cl[i] & cl[j]).bit_count(), i, j) for i in range(k) for j in range(i + 1, k)),
    )
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = []
    for _, i, j in pairs:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            edges.append((i, j))
    return TreeDecomposition(host, tuple(frozenset(bits(c)) for c in cl), tuple(edges))


def brute_force_tree_parameter(g: Graph, measure: "BagMeasure | str", max_n: int = BRUTE_FORCE_MAX_N):
    """tree-p by minimising over all chordal supergraphs; witness is a clique tree."""
    from .measures import MeasureCache
    from .treeparam import ParameterValue, tree_name

    measure = BagMeasure.parse(measure)
    if g.n > max_n:
        raise BudgetExceeded(f"brute force limited to n <= {max_n}, got {g.n}")
    if g.n == 0:
        return ParameterValue(tree_name(measure), -1 if measure is BagMeasure.SIZE else 0, None)
    cache = MeasureCache(g, measure)
    best, best_cliques = None, None
    for _, cliques in chordal_supergraphs(g.adj):
        val = max(cache(c) for c in cliques)
        if best is None or val < best:
            best, best_cliques = val, cliques
    td = clique_tree(g, list(best_cliques))
    value = best - 1 if measure is BagMeasure.SIZE else best
    return ParameterValue(tree_name(measure), value, td)


def treewidth_elimination_dp(g: Graph) -> int:
    """Treewidth by the subset dynamic program over elimination orderings.

    ``TW(S) = min_{v in S} max(TW(S - v), |Q(S - v, v)|)`` where ``Q(S, v)``
    are the vertices outside ``S + v`` reachable from ``v`` through ``S``.
    """
    n = g.n
    if n > 16:
        raise BudgetExceeded(f"elimination DP limited to n <= 16, got {n}")
    if n == 0:
        return -1
    adj = g.adj
    full = (1 << n) - 1

    def q_size(s: int, v: int) -> int:
        reach = 1 << v
        frontier = reach
        out = 0
        while frontier:
            nb = 0
            for x in bits(frontier):
                nb |= adj[x]
            out |= nb & ~s & ~(1 << v)
            frontier = nb & s & ~reach
            reach |= frontier
        return out.bit_count()

    tw = [0] * (1 << n)
    tw[0] = -1
    for s in range(1, 1 << n):
        best = n
        for v in bits(s):
            rest = s & ~(1 << v)
            val = max(tw[rest], q_size(rest, v))
            if val < best:
                best = val
        tw[s] = best
    return tw[full]
