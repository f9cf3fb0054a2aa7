"""Exact graph parameters with certifying witnesses.

``tree_parameter`` minimises ``max_t p(G[X_t])`` over all tree-decompositions
for any bag measure ``p`` that is monotone under induced subgraphs.  Every
decomposition can be refined to the clique tree of a minimal triangulation
without increasing such a measure, and the maximal cliques of minimal
triangulations are exactly the potential maximal cliques.  So the optimum is
found by the usual block dynamic program: a block is a minimal separator
``S`` together with a full component ``C``, and

    f(S, C) = min over PMCs  S < O <= S u C  of
              max(p(O), max over components D of C - O of f(N(D), D)).
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Any, Sequence

from ..errors import BudgetExceeded
from ..graph import Graph, WeightFunction, bits
from ..treedec import BagMeasure, TreeDecomposition, simplify
from .coloring import chromatic_number_mask
from .measures import MeasureCache
from .separators import PmcCatalog, boundary
from .stable import StableSetSolver, components

TREE_GUARD = {BagMeasure.SIZE: 64, BagMeasure.TW: 30, BagMeasure.ALPHA: 30, BagMeasure.CHI: 30}

_TREE_NAMES = {
    BagMeasure.SIZE: "tw",
    BagMeasure.ALPHA: "tree-alpha",
    BagMeasure.CHI: "tree-chi",
    BagMeasure.TW: "tree-tw",
}


def tree_name(measure: BagMeasure) -> str:
    return _TREE_NAMES[measure]


@dataclass(frozen=True)
class ParameterValue:
    """An exact parameter value with an optional certificate.

    The witness is a stable set (``alpha``), a colour tuple indexed by vertex
    (``chi``) or a :class:`TreeDecomposition` (the tree parameters).
    """

    name: str
    value: int
    witness: Any = None


def max_stable_set(g: Graph, weights: WeightFunction | Sequence[int] | None = None) -> ParameterValue:
    w = None
    if weights is not None:
        w = list(weights.weights if isinstance(weights, WeightFunction) else weights)
        if len(w) != g.n:
            raise ValueError("weight vector length does not match the graph")
    val, sol = StableSetSolver(g.adj, w).solve(g.all_mask)
    return ParameterValue("alpha", val, frozenset(bits(sol)))


def chromatic_number(g: Graph) -> ParameterValue:
    val, col = chromatic_number_mask(g.adj, g.all_mask)
    return ParameterValue("chi", val, tuple(col[v] for v in range(g.n)))


def _measure_bag_dp(adj: Sequence[int], universe: int, cost, catalog: PmcCatalog):
    """Run the block DP on one connected universe; return (value, bags, edges)."""
    order_key = {om: i for i, om in enumerate(catalog.pmcs)}

    # candidates for each block (S, C): PMCs O with S < O <= S | C
    cands: dict[tuple[int, int], list[int]] = {}
    for om in catalog.pmcs:
        seen = set()
        for d in components(adj, universe & ~om):
            s = boundary(adj, d, universe)
            if s in seen:
                continue
            seen.add(s)
            rest = om & ~s
            # the full component of s containing om - s
            c = next(x for x in components(adj, universe & ~s) if x & rest)
            cands.setdefault((s, c), []).append(om)

    memo: dict[tuple[int, int], tuple[int, int]] = {}

    def children(om: int, region: int) -> list[tuple[int, int]]:
        return [(boundary(adj, d, universe), d) for d in components(adj, region & ~om)]

    def solve_over(options: Sequence[int], region: int) -> tuple[int, int]:
        best_val, best_om = None, None
        for om in options:
            val = cost(om)
            if best_val is not None and val >= best_val:
                continue
            for blk in children(om, region):
                val = max(val, block(blk)[0])
                if best_val is not None and val >= best_val:
                    break
            if best_val is None or val < best_val:
                best_val, best_om = val, om
        return best_val, best_om

    def block(key: tuple[int, int]) -> tuple[int, int]:
        hit = memo.get(key)
        if hit is None:
            options = sorted(cands[key], key=order_key.__getitem__)
            hit = memo[key] = solve_over(options, key[1])
        return hit

    root_val, root_om = solve_over(catalog.pmcs, universe)

    bags: list[int] = [root_om]
    edges: list[tuple[int, int]] = []
    stack = [(0, root_om, universe)]
    while stack:
        node, om, region = stack.pop()
        for blk in children(om, region):
            child_om = block(blk)[1]
            bags.append(child_om)
            edges.append((node, len(bags) - 1))
            stack.append((len(bags) - 1, child_om, blk[1]))
    return root_val, bags, edges


def tree_parameter(g: Graph, measure: "BagMeasure | str", guard: int | None = None) -> ParameterValue:
    """Exact tree-p(G) with a witness decomposition.

    For the ``size`` measure the reported value is the treewidth (largest bag
    minus one).  Raises :class:`BudgetExceeded` when ``g.n`` exceeds ``guard``.
    """
    measure = BagMeasure.parse(measure)
    limit = TREE_GUARD[measure] if guard is None else guard
    if g.n > limit:
        raise BudgetExceeded(f"{tree_name(measure)} limited to n <= {limit}, got {g.n}")
    if g.n == 0:
        return ParameterValue(tree_name(measure), -1 if measure is BagMeasure.SIZE else 0, None)
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 10_000))

    cost = MeasureCache(g, measure)
    adj = g.adj
    value = 0
    bags: list[int] = []
    edges: list[tuple[int, int]] = []
    try:
        for comp in components(adj, g.all_mask):
            catalog = PmcCatalog.build(adj, comp)
            val, cb, ce = _measure_bag_dp(adj, comp, cost, catalog)
            offset = len(bags)
            if offset:
                edges.append((0, offset))
            bags.extend(cb)
            edges.extend((i + offset, j + offset) for i, j in ce)
            value = max(value, val)
    finally:
        sys.setrecursionlimit(old)
    td = simplify(TreeDecomposition(g, tuple(frozenset(bits(b)) for b in bags), tuple(edges)))
    if measure is BagMeasure.SIZE:
        value -= 1
    return ParameterValue(tree_name(measure), value, td)


def treewidth(g: Graph, guard: int | None = None) -> ParameterValue:
    return tree_parameter(g, BagMeasure.SIZE, guard)


def tree_alpha(g: Graph, guard: int | None = None) -> ParameterValue:
    return tree_parameter(g, BagMeasure.ALPHA, guard)


def tree_chi(g: Graph, guard: int | None = None) -> ParameterValue:
    return tree_parameter(g, BagMeasure.CHI, guard)


def tree_tw(g: Graph, guard: int | None = None) -> ParameterValue:
    return tree_parameter(g, BagMeasure.TW, guard)
