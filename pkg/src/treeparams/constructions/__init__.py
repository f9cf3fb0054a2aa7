"""Explicit graphs and decompositions: completions, Burling levels, blowups."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from ..errors import DependencyError, DomainError, InvalidParameter, MalformedInput
from ..graph import Graph, Homomorphism, WeightFunction, blowup, cycle, disjoint_union
from .burling import (
    N_MAX,
    BurlingLevel,
    burling,
    burling_counts,
    burling_star_forest_decomposition,
    stable_bound,
    weight_total,
)
from .completion import (
    CompletionResult,
    completion_lift_decomposition,
    completion_star_decomposition,
    crown_decomposition,
    non_edges,
    one_completion,
)
from .weighting import find_weighting, max_weight_stable_set_milp, verify_weighting

__all__ = [
    "N_MAX",
    "BurlingLevel",
    "CompletionResult",
    "burling",
    "burling_counts",
    "burling_star_forest_decomposition",
    "stable_bound",
    "weight_total",
    "one_completion",
    "non_edges",
    "completion_star_decomposition",
    "completion_lift_decomposition",
    "crown_decomposition",
    "find_weighting",
    "verify_weighting",
    "max_weight_stable_set_milp",
    "cached_weighting_path",
    "load_cached_weighting",
    "burling_weighting",
    "blowup_burling",
    "counterexample",
]

# searching beyond this level takes tens of seconds; use the cached file
SEARCH_MAX_K = 3


def cached_weighting_path(k: int) -> Path:
    return Path(str(resources.files("treeparams") / "data" / f"burling_w{k}.txt"))


def load_cached_weighting(k: int) -> WeightFunction | None:
    """The cached level-``k`` weighting if present and matching the current ``G_k``."""
    from ..io import graph_hash, parse_weights

    path = cached_weighting_path(k)
    if not path.exists():
        return None
    try:
        w, meta = parse_weights(path.read_text())
    except MalformedInput:
        return None
    g = burling(k).graph
    expected = {"bound": stable_bound(k), "target": weight_total(k), "graph": graph_hash(g)}
    if meta != expected or len(w) != g.n:
        return None
    return w


def burling_weighting(k: int, allow_search: bool = True, time_budget: float = 600.0) -> WeightFunction:
    """A verified weighting of ``G_k`` with total ``weight_total(k)`` and
    stable-set weight at most ``stable_bound(k)``.

    The cache is tried first; a fresh search runs only when allowed and
    ``k <= SEARCH_MAX_K`` (or when ``allow_search="force"``).
    """
    g = burling(k).graph
    w = load_cached_weighting(k)
    if w is not None:
        ok, _ = verify_weighting(g, w, stable_bound(k), weight_total(k))
        if ok:
            return w
    if allow_search == "force" or (allow_search and k <= SEARCH_MAX_K):
        w = find_weighting(g, stable_bound(k), weight_total(k), time_budget=time_budget)
        if w is not None:
            return w
    raise DependencyError(
        f"no verified weighting for level {k}; regenerate with "
        f"`treeparams weights --burling {k}`"
    )


def blowup_burling(k: int, weighting: WeightFunction | None = None, allow_search: bool = True) -> tuple[Graph, Homomorphism]:
    """``H_k``: the blowup of ``G_k`` by its weighting, with the projection onto ``G_k``."""
    if not (1 <= k <= N_MAX):
        raise DomainError(f"blowup level must satisfy 1 <= k <= {N_MAX}, got {k}")
    if weighting is None:
        weighting = burling_weighting(k, allow_search=allow_search)
    return blowup(burling(k).graph, weighting)


def counterexample(kind: str, k: int) -> Graph:
    """``burling_completion``: ``C(H_k)``; ``pentagon``: ``C(k C_5)``."""
    if k < 1:
        raise InvalidParameter(f"k must be >= 1, got {k}")
    if kind == "pentagon":
        return one_completion(disjoint_union([cycle(5)] * k)).graph
    if kind == "burling_completion":
        return one_completion(blowup_burling(k)[0]).graph
    raise InvalidParameter(f"unknown counterexample kind {kind!r}")
