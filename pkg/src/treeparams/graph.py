"""Finite simple undirected graphs with stable string labels.

Vertices are the integers ``0..n-1``; every vertex also carries a string
label that constructions choose deterministically.  Adjacency is stored as one
Python ``int`` bitmask per vertex, which gives O(1) edge queries and cheap set
intersections.  Vertex sets passed between modules are plain iterables of
indices (``frozenset`` when returned); solvers work on bitmasks internally.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InvalidParameter, PreconditionError

__all__ = [
    "Graph",
    "Homomorphism",
    "WeightFunction",
    "bits",
    "mask_of",
    "build",
    "complete",
    "empty",
    "cycle",
    "path",
    "disjoint_union",
    "complement",
    "induced_subgraph",
    "is_stable_set",
    "blowup",
]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph; see the module docstring for the layout."""

    __slots__ = ("_labels", "_adj", "_index", "_hash")

    def __init__(self, labels: Sequence[str], edges: Iterable[tuple[int, int]] = ()):
        labels = tuple(str(x) for x in labels)
        n = len(labels)
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameter(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidParameter(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._init(labels, tuple(adj))

    def _init(self, labels: tuple[str, ...], adj: tuple[int, ...]) -> None:
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != len(labels):
            raise InvalidParameter("vertex labels must be unique")
        self._labels = labels
        self._adj = adj
        self._index = index
        self._hash = None

    @classmethod
    def from_masks(cls, labels: Sequence[str], adj: Sequence[int]) -> "Graph":
        """Build from bitmask rows; the caller guarantees symmetry and no loops."""
        g = cls.__new__(cls)
        g._init(tuple(labels), tuple(adj))
        return g

    @property
    def n(self) -> int:
        return len(self._labels)

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhood bitmask of each vertex."""
        return self._adj

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def index(self, label: str) -> int:
        return self._index[label]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self._adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self._adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._labels == other._labels and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._labels, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class WeightFunction:
    """Non-negative integer vertex weights, indexed like the graph's vertices."""

    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))

    @classmethod
    def constant(cls, n: int, value: int = 1) -> "WeightFunction":
        return cls((value,) * n)

    @property
    def total(self) -> int:
        return sum(self.weights)

    def of(self, vertices: Iterable[int]) -> int:
        """Total weight of a vertex set."""
        return sum(self.weights[v] for v in vertices)

    def __getitem__(self, v: int) -> int:
        return self.weights[v]

    def __len__(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class Homomorphism:
    """A vertex map ``source -> target``; ``mapping[v]`` is the image of ``v``."""

    source: Graph
    target: Graph
    mapping: tuple[int, ...]

    def violations(self) -> list[tuple[int, int]]:
        """Source edges whose images are not target edges (exhaustive scan)."""
        f = self.mapping
        return [(u, v) for u, v in self.source.edges() if not self.target.has_edge(f[u], f[v])]

    def is_valid(self) -> bool:
        if len(self.mapping) != self.source.n:
            return False
        if any(not (0 <= x < self.target.n) for x in self.mapping):
            return False
        return not self.violations()

    def preimage_mask(self, target_vertices: Iterable[int]) -> int:
        wanted = mask_of(target_vertices)
        return mask_of(v for v, x in enumerate(self.mapping) if wanted >> x & 1)


# -- builders ---------------------------------------------------------------

def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"complete graph needs n >= 1, got {n}")
    full = (1 << n) - 1
    return Graph.from_masks([str(i) for i in range(n)], [full & ~(1 << i) for i in range(n)])


def empty(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"empty graph needs n >= 1, got {n}")
    return Graph([str(i) for i in range(n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter(f"cycle needs n >= 3, got {n}")
    return Graph([str(i) for i in range(n)], [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"path needs n >= 1, got {n}")
    return Graph([str(i) for i in range(n)], [(i, i + 1) for i in range(n - 1)])


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Union of copies; copy ``i`` relabels ``x`` as ``"i:x"``."""
    if not graphs:
        raise InvalidParameter("disjoint_union needs at least one graph")
    labels: list[str] = []
    adj: list[int] = []
    offset = 0
    for i, g in enumerate(graphs):
        labels.extend(f"{i}:{lab}" for lab in g.labels)
        adj.extend(a << offset for a in g.adj)
        offset += g.n
    return Graph.from_masks(labels, adj)


_BUILDERS = {"complete": complete, "empty": empty, "cycle": cycle, "path": path}


def build(kind: str, *args, **kwargs) -> Graph:
    """Dispatch by name: ``complete``, ``empty``, ``cycle``, ``path`` or ``disjoint_union``."""
    if kind == "disjoint_union":
        return disjoint_union(*args, **kwargs)
    try:
        fn = _BUILDERS[kind]
    except KeyError:
        raise InvalidParameter(f"unknown graph kind {kind!r}") from None
    return fn(*args, **kwargs)


# -- elementary operations --------------------------------------------------

def _check_vertices(g: Graph, vertices: Iterable[int]) -> list[int]:
    vs = sorted(set(vertices))
    for v in vs:
        if not (0 <= v < g.n):
            raise PreconditionError(f"vertex index {v} out of range for n={g.n}")
    return vs


def complement(g: Graph) -> Graph:
    full = g.all_mask
    return Graph.from_masks(g.labels, [full & ~a & ~(1 << i) for i, a in enumerate(g.adj)])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, renumbered in increasing index order."""
    vs = _check_vertices(g, vertices)
    pos = {v: i for i, v in enumerate(vs)}
    adj = []
    for v in vs:
        adj.append(mask_of(pos[u] for u in bits(g.adj[v]) if u in pos))
    return Graph.from_masks([g.labels[v] for v in vs], adj)


def is_stable_set(g: Graph, vertices: Iterable[int]) -> bool:
    vs = _check_vertices(g, vertices)
    m = mask_of(vs)
    return all(not (g.adj[v] & m) for v in vs)


def blowup(g: Graph, w: WeightFunction | Sequence[int] | Mapping[int, int]) -> tuple[Graph, Homomorphism]:
    """Replace each vertex ``v`` by ``w(v)`` pairwise non-adjacent copies.

    Copies of ``a`` and ``b`` are completely joined iff ``ab`` is an edge.  The
    copies of ``v`` are labelled ``"<label>#i"``; vertices of weight zero are
    dropped.  Returns the blown-up graph and its projection onto ``g``.
    """
    if isinstance(w, Mapping):
        weights = [w.get(v, 0) for v in range(g.n)]
    else:
        weights = list(w.weights if isinstance(w, WeightFunction) else w)
    if len(weights) != g.n:
        raise InvalidParameter(f"weight vector has length {len(weights)}, graph has {g.n} vertices")
    if any(x < 0 for x in weights):
        raise InvalidParameter("weights must be non-negative")

    labels: list[str] = []
    origin: list[int] = []
    classes: list[int] = []
    for v, k in enumerate(weights):
        start = len(labels)
        labels.extend(f"{g.labels[v]}#{i}" for i in range(k))
        origin.extend([v] * k)
        classes.append(((1 << k) - 1) << start)
    adj = []
    for v in origin:
        row = 0
        for u in bits(g.adj[v]):
            row |= classes[u]
        adj.append(row)
    h = Graph.from_masks(labels, adj)
    return h, Homomorphism(h, g, tuple(origin))
