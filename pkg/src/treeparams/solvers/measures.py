"""Bag measures evaluated on induced subgraphs, memoised by vertex mask."""

from __future__ import annotations

from ..graph import Graph, bits, induced_subgraph
from ..treedec import BagMeasure
from .coloring import chromatic_number_mask
from .stable import StableSetSolver


class MeasureCache:
    """Callable ``mask -> p(G[mask])`` with a per-host memo.

    ``size`` is the number of vertices, ``tw`` the exact treewidth (``-1`` on
    the empty set).
    """

    def __init__(self, host: Graph, measure: BagMeasure):
        self.host = host
        self.measure = BagMeasure.parse(measure)
        self._memo: dict[int, int] = {}
        self._mis = StableSetSolver(host.adj) if self.measure is BagMeasure.ALPHA else None

    def __call__(self, mask: int) -> int:
        if self.measure is BagMeasure.SIZE:
            return mask.bit_count()
        val = self._memo.get(mask)
        if val is None:
            val = self._memo[mask] = self._compute(mask)
        return val

    def _compute(self, mask: int) -> int:
        if self.measure is BagMeasure.ALPHA:
            return self._mis.solve(mask)[0]
        if self.measure is BagMeasure.CHI:
            return chromatic_number_mask(self.host.adj, mask)[0]
        # treewidth of the induced subgraph
        if mask == 0:
            return -1
        from .treeparam import treewidth

        return treewidth(induced_subgraph(self.host, bits(mask))).value
