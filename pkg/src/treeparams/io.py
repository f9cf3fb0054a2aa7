"""Text formats: PACE-style ``.gr`` and ``.td``, stable-set families, weights.

All writers produce canonical text, and ``write(read(text)) == text`` holds
for any text a writer produced.  Indices in files are 1-based.
"""

from __future__ import annotations

import hashlib
import os
import tempfile
from pathlib import Path
from typing import Iterable, Sequence

from .errors import MalformedInput
from .graph import Graph, WeightFunction
from .treedec import TreeDecomposition


def atomic_write(path: str | os.PathLike, text: str) -> None:
    """Write via a temporary file in the same directory, then rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _int(tok: str, line_no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise MalformedInput(f"line {line_no}: expected an integer, got {tok!r}") from None


# -- graphs -------------------------------------------------------------------

def format_graph(g: Graph) -> str:
    lines = [f"p tw {g.n} {g.m}"]
    lines.extend(f"c label {i + 1} {lab}" for i, lab in enumerate(g.labels))
    lines.extend(f"{u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    header = None
    labels: dict[int, str] = {}
    edges = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            parts = line.split(maxsplit=3)
            if len(parts) >= 3 and parts[0] == "c" and parts[1] == "label":
                labels[_int(parts[2], no)] = parts[3] if len(parts) == 4 else ""
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None or len(parts) != 4 or parts[1] != "tw":
                raise MalformedInput(f"line {no}: bad header {raw!r}")
            header = (_int(parts[2], no), _int(parts[3], no))
            continue
        if header is None:
            raise MalformedInput(f"line {no}: edge before 'p tw' header")
        if len(parts) != 2:
            raise MalformedInput(f"line {no}: expected '<u> <v>', got {raw!r}")
        u, v = _int(parts[0], no), _int(parts[1], no)
        if not (1 <= u <= header[0] and 1 <= v <= header[0]) or u == v:
            raise MalformedInput(f"line {no}: edge {u} {v} out of range or a loop")
        edges.append((u - 1, v - 1))
    if header is None:
        raise MalformedInput("missing 'p tw <n> <m>' header")
    n, m = header
    names = [labels.get(i + 1, str(i + 1)) for i in range(n)]
    if len(set(names)) != n:
        raise MalformedInput("duplicate vertex labels")
    g = Graph(names, edges)
    if g.m != m or len(edges) != m:
        raise MalformedInput(f"header declares {m} edges, found {len(edges)} ({g.m} distinct)")
    return g


def write_graph(g: Graph, path) -> None:
    atomic_write(path, format_graph(g))


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text())


def graph_hash(g: Graph) -> str:
    return hashlib.sha256(format_graph(g).encode()).hexdigest()[:16]


# -- tree-decompositions ------------------------------------------------------

def format_td(td: TreeDecomposition) -> str:
    size = max((len(b) for b in td.bags), default=0)
    lines = [f"s td {td.num_nodes} {size} {td.host.n}"]
    for t, bag in enumerate(td.bags):
        lines.append(" ".join(["b", str(t + 1), *(str(v + 1) for v in sorted(bag))]))
    lines.extend(f"{i + 1} {j + 1}" for i, j in td.edges)
    return "\n".join(lines) + "\n"


def parse_td(text: str, host: Graph) -> TreeDecomposition:
    """Parse a ``.td`` file over ``host``.  Structural errors are left to ``validate``."""
    header = None
    bags: dict[int, frozenset] = {}
    edges = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "s":
            if header is not None or len(parts) != 5 or parts[1] != "td":
                raise MalformedInput(f"line {no}: bad header {raw!r}")
            header = tuple(_int(x, no) for x in parts[2:])
            continue
        if header is None:
            raise MalformedInput(f"line {no}: content before 's td' header")
        if parts[0] == "b":
            if len(parts) < 2:
                raise MalformedInput(f"line {no}: bag line without id")
            bid = _int(parts[1], no)
            if not 1 <= bid <= header[0] or bid in bags:
                raise MalformedInput(f"line {no}: bad or repeated bag id {bid}")
            verts = [_int(x, no) for x in parts[2:]]
            if any(not 1 <= v <= header[2] for v in verts):
                raise MalformedInput(f"line {no}: vertex out of range")
            bags[bid] = frozenset(v - 1 for v in verts)
            continue
        if len(parts) != 2:
            raise MalformedInput(f"line {no}: expected tree edge '<i> <j>', got {raw!r}")
        i, j = _int(parts[0], no), _int(parts[1], no)
        if not (1 <= i <= header[0] and 1 <= j <= header[0]):
            raise MalformedInput(f"line {no}: tree edge {i} {j} out of range")
        edges.append((i - 1, j - 1))
    if header is None:
        raise MalformedInput("missing 's td' header")
    nbags, size, n = header
    if n != host.n:
        raise MalformedInput(f"decomposition is for {n} vertices, graph has {host.n}")
    if sorted(bags) != list(range(1, nbags + 1)):
        raise MalformedInput(f"expected bags 1..{nbags}")
    if max((len(b) for b in bags.values()), default=0) != size:
        raise MalformedInput("declared maximum bag size does not match the bags")
    return TreeDecomposition(host, tuple(bags[t + 1] for t in range(nbags)), tuple(edges))


def write_td(td: TreeDecomposition, path) -> None:
    atomic_write(path, format_td(td))


def read_td(path, host: Graph) -> TreeDecomposition:
    return parse_td(Path(path).read_text(), host)


# -- stable-set families ------------------------------------------------------

def format_family(family: Sequence[Iterable[int]], comment: str | None = None) -> str:
    """One ``s v1 v2 ...`` line per set (1-based), so empty sets survive."""
    lines = [f"c {comment}"] if comment else []
    lines.extend(" ".join(["s", *(str(v + 1) for v in sorted(s))]) for s in family)
    return "\n".join(lines) + "\n"


def parse_family(text: str, n: int | None = None) -> list[frozenset]:
    fam = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        toks = line.split()
        if toks[0] != "s":
            raise MalformedInput(f"line {no}: expected 's <vertices>'")
        verts = [_int(x, no) for x in toks[1:]]
        if any(v < 1 or (n is not None and v > n) for v in verts):
            raise MalformedInput(f"line {no}: vertex out of range")
        fam.append(frozenset(v - 1 for v in verts))
    return fam


# -- weights ------------------------------------------------------------------

def format_weights(w: WeightFunction, bound: int, target: int, ghash: str) -> str:
    lines = [f"c bound {bound} target {target} graph {ghash}"]
    lines.extend(f"{v + 1} {x}" for v, x in enumerate(w.weights))
    return "\n".join(lines) + "\n"


def parse_weights(text: str) -> tuple[WeightFunction, dict]:
    """Return the weights and the header fields (``bound``, ``target``, ``graph``)."""
    meta: dict = {}
    pairs: dict[int, int] = {}
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            toks = line.split()[1:]
            if toks[:1] == ["bound"] and len(toks) == 6:
                meta = {"bound": _int(toks[1], no), "target": _int(toks[3], no), "graph": toks[5]}
            continue
        parts = line.split()
        if len(parts) != 2:
            raise MalformedInput(f"line {no}: expected '<vertex> <weight>'")
        v, x = _int(parts[0], no), _int(parts[1], no)
        if v < 1 or v in pairs or x < 0:
            raise MalformedInput(f"line {no}: bad vertex index or weight")
        pairs[v] = x
    if sorted(pairs) != list(range(1, len(pairs) + 1)):
        raise MalformedInput("weights must list vertices 1..n")
    return WeightFunction(tuple(pairs[v] for v in range(1, len(pairs) + 1))), meta
