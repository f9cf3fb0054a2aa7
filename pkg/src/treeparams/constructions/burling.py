"""The Burling sequence ``(G_n, S_n)`` and its star-forest decompositions.

Vertex layout of level ``n`` built from level ``n-1`` (``v`` vertices, family
of ``s`` sets):

* ``0..v-1``: the previous level, labelled ``"b/<label>"``;
* ``v + i*v + x``: vertex ``x`` of the copy attached to the ``i``-th set,
  labelled ``"c<i>/<label>"``;
* ``v + s*v + i*s + j``: the apex joined to the ``j``-th set of copy ``i``,
  labelled ``"v<i>.<j>"``.

``G_1`` is the single vertex ``"root"``, so every label is a path from the
top level down to it.

The family lists, for ``i`` then ``j``, first ``S_i + Q_j`` then
``S_i + apex(i, j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..errors import DomainError
from ..graph import Graph, bits, mask_of
from ..treedec import TreeDecomposition

N_MAX = 4


@dataclass(frozen=True)
class BurlingLevel:
    graph: Graph
    family: tuple[frozenset, ...]
    provenance: tuple[tuple, ...]

    @property
    def n_sets(self) -> int:
        return len(self.family)


def _check_level(n: int, n_max: int) -> None:
    if not (1 <= n <= n_max):
        raise DomainError(f"Burling level must satisfy 1 <= n <= {n_max}, got {n}")


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[BurlingLevel, TreeDecomposition]:
    if n == 1:
        g = Graph(["root"])
        lvl = BurlingLevel(g, (frozenset({0}),), (("root",),))
        return lvl, TreeDecomposition(g, (frozenset({0}),), ())

    prev, prev_td = _level(n - 1)
    pg, fam = prev.graph, prev.family
    v, s = pg.n, len(fam)
    copy_base = lambda i: v + i * v
    apex = lambda i, j: v + s * v + i * s + j

    labels = [f"b/{lab}" for lab in pg.labels]
    adj = list(pg.adj)
    prov: list[tuple] = [("base", x) for x in range(v)]
    for i in range(s):
        off = copy_base(i)
        labels.extend(f"c{i}/{lab}" for lab in pg.labels)
        adj.extend(a << off for a in pg.adj)
        prov.extend(("copy", i, x) for x in range(v))
    fam_masks = [mask_of(q) for q in fam]
    for i in range(s):
        for j in range(s):
            q = fam_masks[j] << copy_base(i)
            a = apex(i, j)
            labels.append(f"v{i}.{j}")
            adj.append(q)
            prov.append(("apex", i, j))
            for x in bits(q):
                adj[x] |= 1 << a
    g = Graph.from_masks(labels, adj)

    family = []
    for i, S in enumerate(fam):
        for j, Q in enumerate(fam):
            q = frozenset(x + copy_base(i) for x in Q)
            family.append(frozenset(S) | q)
            family.append(frozenset(S) | {apex(i, j)})
    lvl = BurlingLevel(g, tuple(family), tuple(prov))

    # decomposition: previous tree first, then per set i the shifted copy of
    # the previous tree followed by one leaf per Q_j; every bag of the copy,
    # leaves included, also receives S_i so that S_i + apex(i, j) is covered
    k = prev_td.num_nodes
    prev_masks = prev_td.bag_masks()
    first_holder = [next(t for t, m in enumerate(prev_masks) if m & fm == fm) for fm in fam_masks]
    bags = list(prev_td.bags)
    edges = list(prev_td.edges)
    for i, S in enumerate(fam):
        node_off = len(bags)
        off = copy_base(i)
        for b in prev_td.bags:
            bags.append(frozenset(x + off for x in b) | S)
        edges.extend((a + node_off, b + node_off) for a, b in prev_td.edges)
        # t_S in the previous tree is joined to the root (node 0) of the copy
        edges.append((first_holder[i], node_off))
        for j, Q in enumerate(fam):
            bags.append(frozenset(x + off for x in Q) | {apex(i, j)} | S)
            edges.append((node_off + first_holder[j], len(bags) - 1))
    return lvl, TreeDecomposition(g, tuple(bags), tuple(edges))


def burling(n: int, n_max: int = N_MAX) -> BurlingLevel:
    """Level ``n`` of the Burling sequence (``1 <= n <= n_max``)."""
    _check_level(n, n_max)
    return _level(n)[0]


def burling_star_forest_decomposition(n: int, n_max: int = N_MAX) -> TreeDecomposition:
    """Decomposition of ``G_n`` whose bags induce star forests and cover each family member.

    Built by the same recursion as the graph; ``t_S`` and ``t_{S,Q}`` are the
    first nodes (by id) whose bags contain the set in question.  Leaf bags
    are ``Q + {v_SQ} + S``: a star plus isolated vertices.
    """
    _check_level(n, n_max)
    return _level(n)[1]


def burling_counts(n: int) -> tuple[int, int]:
    """``(|V(G_n)|, |S_n|)`` from the recurrences, without building the graph."""
    v, s = 1, 1
    for _ in range(n - 1):
        v, s = v + s * v + s * s, 2 * s * s
    return v, s


def weight_total(k: int) -> int:
    """``(k+1)/2 * 2^(2^(k-1) - 1)``, the total weight of the level-``k`` witness."""
    b = stable_bound(k)
    return (k + 1) * b // 2


def stable_bound(k: int) -> int:
    """``2^(2^(k-1) - 1)``, the stable-set weight bound at level ``k``."""
    return 2 ** (2 ** (k - 1) - 1)
