"""Tree-decompositions: data type, axiom validation, bag measures, pullback."""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import PreconditionError
from .graph import Graph, Homomorphism, bits, mask_of

__all__ = [
    "BagMeasure",
    "TreeDecomposition",
    "Violation",
    "ValidationReport",
    "validate",
    "bag_parameter",
    "pullback",
    "simplify",
    "is_star_forest",
]


class BagMeasure(str, enum.Enum):
    """Parameter applied to the subgraph induced by each bag."""

    SIZE = "size"
    ALPHA = "alpha"
    CHI = "chi"
    TW = "tw"

    @classmethod
    def parse(cls, value: "str | BagMeasure") -> "BagMeasure":
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            raise PreconditionError(f"unknown bag measure {value!r}") from None


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags over ``host`` indexed by dense node ids ``0..len(bags)-1``.

    ``edges`` lists tree edges as ``(i, j)`` pairs with ``i < j``.
    """

    host: Graph
    bags: tuple[frozenset, ...]
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in self.bags))
        object.__setattr__(
            self, "edges", tuple(sorted((min(i, j), max(i, j)) for i, j in self.edges))
        )

    @classmethod
    def single_bag(cls, host: Graph) -> "TreeDecomposition":
        return cls(host, (frozenset(range(host.n)),), ())

    @property
    def num_nodes(self) -> int:
        return len(self.bags)

    def width(self) -> int:
        return max(len(b) for b in self.bags) - 1

    def adjacency(self) -> list[list[int]]:
        nbrs: list[list[int]] = [[] for _ in self.bags]
        for i, j in self.edges:
            nbrs[i].append(j)
            nbrs[j].append(i)
        return nbrs

    def bag_masks(self) -> list[int]:
        return [mask_of(b) for b in self.bags]


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple

    def describe(self, host: Graph | None = None) -> str:
        """Human-readable form; with ``host``, vertices and nodes are 1-based as in files."""
        w = self.witness
        if host is None:
            return f"{self.axiom}: {w}"
        if self.axiom == "edge-coverage":
            u, v = w
            return f"{self.axiom}: edge {u + 1} {v + 1} ({host.labels[u]} -- {host.labels[v]}) is in no bag"
        if self.axiom == "vertex-coverage":
            return f"{self.axiom}: vertex {w[0] + 1} ({host.labels[w[0]]}) is in no bag"
        if self.axiom == "connectivity":
            parts = "; ".join(" ".join(str(t + 1) for t in part) for part in w[1:])
            return f"{self.axiom}: vertex {w[0] + 1} ({host.labels[w[0]]}) occurs in disconnected node sets {parts}"
        return f"{self.axiom}: {w}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def by_axiom(self, axiom: str) -> list[Violation]:
        return [v for v in self.violations if v.axiom == axiom]


def _components(nodes: Iterable[int], nbrs: Sequence[Sequence[int]]) -> list[list[int]]:
    allowed = set(nodes)
    seen: set[int] = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in nbrs[x]:
                if y in allowed and y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def validate(td: TreeDecomposition) -> ValidationReport:
    """Check the tree shape and the three covering/connectivity axioms.

    Violations are returned as data.  Witnesses: ``tree`` carries the node
    components or the offending edge, ``vertex-coverage`` the vertex,
    ``edge-coverage`` the edge ``(u, v)`` and ``connectivity`` the vertex
    followed by the node sets of its disconnected trace.
    """
    report = ValidationReport()
    g = td.host
    k = td.num_nodes
    if k == 0:
        report.violations.append(Violation("tree", ("empty",)))
        return report
    for t, bag in enumerate(td.bags):
        bad = sorted(v for v in bag if not (0 <= v < g.n))
        if bad:
            report.violations.append(Violation("bag-range", (t, *bad)))
    for i, j in td.edges:
        if not (0 <= i < k and 0 <= j < k) or i == j:
            report.violations.append(Violation("tree", ("bad-edge", i, j)))
    if report.violations:
        return report
    if len(set(td.edges)) != len(td.edges):
        report.violations.append(Violation("tree", ("parallel-edge",)))
    nbrs = td.adjacency()
    comps = _components(range(k), nbrs)
    if len(comps) > 1:
        report.violations.append(Violation("tree", ("disconnected", *map(tuple, comps))))
    elif len(td.edges) != k - 1:
        report.violations.append(Violation("tree", ("cycle",)))

    trace: dict[int, list[int]] = defaultdict(list)
    masks = td.bag_masks()
    for t, bag in enumerate(td.bags):
        for v in bag:
            trace[v].append(t)
    for v in range(g.n):
        if not trace[v]:
            report.violations.append(Violation("vertex-coverage", (v,)))
    for u, v in g.edges():
        pair = (1 << u) | (1 << v)
        if not any(m & pair == pair for m in masks):
            report.violations.append(Violation("edge-coverage", (u, v)))
    for v in range(g.n):
        if len(trace[v]) > 1:
            parts = _components(trace[v], nbrs)
            if len(parts) > 1:
                report.violations.append(Violation("connectivity", (v, *map(tuple, parts))))
    return report


def _require_valid(td: TreeDecomposition, what: str = "tree-decomposition") -> None:
    report = validate(td)
    if not report.ok:
        raise PreconditionError(f"invalid {what}: {report.violations[0].describe(td.host)}")


def bag_parameter(td: TreeDecomposition, measure: "BagMeasure | str", check: bool = True) -> tuple[int, int]:
    """Return ``(max_t p(G[X_t]), argmax node)``; ties go to the smallest node id.

    For ``size`` the value is the largest bag size (width + 1).
    """
    from .solvers.measures import MeasureCache

    measure = BagMeasure.parse(measure)
    if check:
        _require_valid(td)
    cache = MeasureCache(td.host, measure)
    best, arg = -1, -1
    for t, m in enumerate(td.bag_masks()):
        val = cache(m)
        if val > best:
            best, arg = val, t
    return best, arg


def pullback(td: TreeDecomposition, hom: Homomorphism) -> TreeDecomposition:
    """Pull a decomposition of ``hom.target`` back along ``hom`` to its source.

    Same tree; each bag becomes the union of the preimages of its vertices.
    """
    if hom.target != td.host:
        raise PreconditionError("homomorphism target is not the decomposition's host")
    if not hom.is_valid():
        raise PreconditionError("map is not a graph homomorphism")
    _require_valid(td, "target decomposition")
    pre: dict[int, list[int]] = defaultdict(list)
    for v, x in enumerate(hom.mapping):
        pre[x].append(v)
    bags = []
    for bag in td.bags:
        bags.append(frozenset(v for x in bag for v in pre[x]))
    out = TreeDecomposition(hom.source, tuple(bags), td.edges)
    _require_valid(out, "pulled-back decomposition")
    return out


def simplify(td: TreeDecomposition) -> TreeDecomposition:
    """Contract tree edges whose one bag is contained in the other's.

    Surviving nodes keep their relative id order.
    """
    alive = [True] * td.num_nodes
    bags = list(td.bags)
    nbrs = [set(x) for x in td.adjacency()]
    changed = True
    while changed:
        changed = False
        for i in range(len(bags)):
            if not alive[i]:
                continue
            for j in sorted(nbrs[i]):
                if bags[i] <= bags[j]:
                    drop, keep = i, j
                elif bags[j] <= bags[i]:
                    drop, keep = j, i
                else:
                    continue
                for x in nbrs[drop]:
                    if x != keep:
                        nbrs[x].discard(drop)
                        nbrs[x].add(keep)
                        nbrs[keep].add(x)
                nbrs[keep].discard(drop)
                nbrs[drop] = set()
                alive[drop] = False
                changed = True
                break
    ids = [t for t in range(len(bags)) if alive[t]]
    new = {t: i for i, t in enumerate(ids)}
    edges = {(min(new[a], new[b]), max(new[a], new[b])) for a in ids for b in nbrs[a]}
    return TreeDecomposition(td.host, tuple(bags[t] for t in ids), tuple(sorted(edges)))


def is_star_forest(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff ``g[vertices]`` is a star forest.

    A component is a star iff it is a tree with at most one vertex of degree
    at least 2.
    """
    m = mask_of(vertices)
    seen = 0
    for s in bits(m):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for x in bits(frontier):
                nxt |= g.adj[x] & m
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        degs = [(g.adj[x] & m).bit_count() for x in bits(comp)]
        if sum(degs) // 2 != comp.bit_count() - 1:
            return False
        if sum(1 for d in degs if d >= 2) > 1:
            return False
    return True
