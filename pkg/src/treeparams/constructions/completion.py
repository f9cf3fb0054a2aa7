"""1-completions and their explicit tree-decompositions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..errors import DomainError, PreconditionError
from ..graph import Graph, bits, complement, empty
from ..treedec import TreeDecomposition, validate


@dataclass(frozen=True)
class CompletionResult:
    """``C(H)`` plus the map from each non-adjacent pair ``(u, v)``, ``u < v``,
    to its degree-2 vertex.  Vertices of ``H`` keep their indices."""

    graph: Graph
    added: dict

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return sorted(self.added)


def non_edges(h: Graph) -> list[tuple[int, int]]:
    return complement(h).edges()


def one_completion(h: Graph) -> CompletionResult:
    """Add, for every non-adjacent pair ``u < v``, a vertex ``"a(u,v)"`` adjacent to both."""
    pairs = non_edges(h)
    labels = list(h.labels)
    adj = list(h.adj)
    added = {}
    for u, v in pairs:
        x = len(labels)
        labels.append(f"a({h.labels[u]},{h.labels[v]})")
        adj.append((1 << u) | (1 << v))
        adj[u] |= 1 << x
        adj[v] |= 1 << x
        added[(u, v)] = x
    return CompletionResult(Graph.from_masks(labels, adj), added)


def completion_star_decomposition(h: Graph) -> TreeDecomposition:
    """Star decomposition of ``C(H)`` of width ``|V(H)| - 1``.

    Node 0 holds ``V(H)``; node ``i >= 1`` is the leaf for the ``i``-th
    non-adjacent pair ``(u, v)`` and holds ``{u, v, a_uv}``.
    """
    if h.n < 3:
        raise DomainError(f"star decomposition needs |V(H)| >= 3, got {h.n}")
    comp = one_completion(h)
    bags = [frozenset(range(h.n))]
    edges = []
    for (u, v), a in sorted(comp.added.items()):
        bags.append(frozenset((u, v, a)))
        edges.append((0, len(bags) - 1))
    return TreeDecomposition(comp.graph, tuple(bags), tuple(edges))


def completion_lift_decomposition(h: Graph, td: TreeDecomposition) -> TreeDecomposition:
    """Lift a decomposition of ``H`` to one of ``C(H)`` with the same chi measure
    (or 2, whichever is larger).

    For each non-adjacent pair ``(u, v)`` in order: if some bag holds both
    ends, a leaf ``{u, v, a_uv}`` is hung off the first such node; otherwise
    ``a_uv`` joins every original bag.  Original nodes keep their ids and
    new leaves are appended in pair order.
    """
    if h.m == 0:
        raise DomainError("lift needs a graph with at least one edge")
    if td.host != h:
        raise PreconditionError("decomposition is not over the given graph")
    report = validate(td)
    if not report.ok:
        raise PreconditionError(f"invalid decomposition of H: {report.violations[0].describe(h)}")
    comp = one_completion(h)
    masks = td.bag_masks()
    bags = [set(b) for b in td.bags]
    edges = list(td.edges)
    spread = []
    for (u, v), a in sorted(comp.added.items()):
        pair = (1 << u) | (1 << v)
        host_node = next((t for t, m in enumerate(masks) if m & pair == pair), None)
        if host_node is None:
            spread.append(a)
        else:
            bags.append({u, v, a})
            edges.append((host_node, len(bags) - 1))
    for t in range(td.num_nodes):
        bags[t].update(spread)
    return TreeDecomposition(comp.graph, tuple(frozenset(b) for b in bags), tuple(edges))


def crown_decomposition(n: int) -> TreeDecomposition:
    """Decomposition of ``C(K̄_n)`` whose bags have independence number ``n - 1``.

    Node 0 (centre) holds ``a_1..a_{n-1}`` with the neighbours of ``a_0``;
    node 1 holds ``a_0`` with its neighbours; nodes ``2..`` hold
    ``{a_i, a_j, a_ij}`` for ``1 <= i < j <= n-1`` in lexicographic order.
    """
    if n < 3:
        raise DomainError(f"crown decomposition needs n >= 3, got {n}")
    comp = one_completion(empty(n))
    g = comp.graph
    a0_nbrs = set(bits(g.adj[0]))
    bags = [frozenset(set(range(1, n)) | a0_nbrs), frozenset({0} | a0_nbrs)]
    edges = [(0, 1)]
    for i, j in combinations(range(1, n), 2):
        bags.append(frozenset((i, j, comp.added[(i, j)])))
        edges.append((0, len(bags) - 1))
    return TreeDecomposition(g, tuple(bags), tuple(edges))
