"""Integer vertex weightings with bounded stable-set weight.

``find_weighting`` looks for ``w >= 0`` with ``w(V) = target`` and
``w(I) <= bound`` for every stable set ``I``.  It keeps a pool of stable
sets, solves the integer feasibility problem restricted to the pool, and asks
the exact weighted stable-set solver for a violated set; the loop stops when
no stable set is violated.
"""

from __future__ import annotations

import logging
import time

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

from ..errors import BudgetExceeded, InvalidParameter
from ..graph import Graph, WeightFunction, bits
from ..solvers.stable import StableSetSolver

log = logging.getLogger(__name__)


def _greedy_maximal(g: Graph, start: int) -> int:
    chosen = 1 << start
    blocked = g.adj[start] | chosen
    for v in range(g.n):
        if not blocked >> v & 1:
            chosen |= 1 << v
            blocked |= g.adj[v] | 1 << v
    return chosen


def _extend_maximal(g: Graph, sol: int, weights) -> int:
    blocked = sol
    for v in bits(sol):
        blocked |= g.adj[v]
    for v in sorted(range(g.n), key=lambda x: -weights[x]):
        if not blocked >> v & 1:
            sol |= 1 << v
            blocked |= g.adj[v] | 1 << v
    return sol


def _solve_master(n: int, pool: list[int], bound: int, target: int, time_limit: float):
    rows = np.zeros((len(pool) + 1, n))
    rows[0, :] = 1.0
    for r, s in enumerate(pool, start=1):
        for v in bits(s):
            rows[r, v] = 1.0
    lo = np.full(len(pool) + 1, -np.inf)
    hi = np.full(len(pool) + 1, float(bound))
    lo[0] = hi[0] = float(target)
    res = milp(
        c=np.zeros(n),
        constraints=LinearConstraint(rows, lo, hi),
        integrality=np.ones(n),
        bounds=Bounds(np.zeros(n), np.full(n, float(bound))),
        options={"time_limit": max(time_limit, 1.0)},
    )
    if res.status == 2:
        return "infeasible", None
    if res.status == 0:
        return "ok", [int(round(x)) for x in res.x]
    return "budget", None


def find_weighting(
    g: Graph,
    bound: int,
    target: int,
    time_budget: float = 600.0,
    max_rounds: int = 100_000,
) -> WeightFunction | None:
    """Return a weighting certified against every stable set, or ``None`` if
    none exists.  Raises :class:`BudgetExceeded` when the search runs out of
    time or rounds before deciding.
    """
    if bound < 1 or target < 1:
        raise InvalidParameter("bound and target must be positive")
    if g.n == 0:
        return None
    start = time.monotonic()
    pool = sorted({_greedy_maximal(g, v) for v in range(g.n)})
    seen = set(pool)
    for rounds in range(max_rounds):
        left = time_budget - (time.monotonic() - start)
        if left <= 0:
            break
        status, w = _solve_master(g.n, pool, bound, target, left)
        if status == "infeasible":
            return None
        if status == "budget":
            break
        worst, sol = StableSetSolver(g.adj, w).solve(g.all_mask)
        if worst <= bound:
            log.info("weighting found after %d rounds, pool %d", rounds + 1, len(pool))
            return _certified(g, w, bound, target)
        sol = _extend_maximal(g, sol, w)
        if sol in seen:
            raise RuntimeError("separation returned a stable set already in the pool")
        seen.add(sol)
        pool.append(sol)
    raise BudgetExceeded(f"weighting search stopped after {len(pool)} pool sets")


def _certified(g: Graph, w, bound: int, target: int) -> WeightFunction:
    wf = WeightFunction(tuple(w))
    val, _ = StableSetSolver(g.adj, wf.weights).solve(g.all_mask)
    if wf.total != target or val > bound or min(wf.weights) < 0:
        raise RuntimeError("weighting failed re-verification")
    return wf


def verify_weighting(g: Graph, w: WeightFunction, bound: int, target: int) -> tuple[bool, int]:
    """Return ``(ok, max stable-set weight)`` using the branch-and-bound solver."""
    if len(w) != g.n:
        return False, -1
    val, _ = StableSetSolver(g.adj, w.weights).solve(g.all_mask)
    return (w.total == target and val <= bound and min(w.weights, default=0) >= 0), val


def max_weight_stable_set_milp(g: Graph, weights) -> int:
    """Maximum-weight stable set by an edge-formulation integer program.

    Independent of the branch-and-bound solver; used to re-verify witnesses.
    """
    n = g.n
    if n == 0:
        return 0
    edges = g.edges()
    c = -np.asarray(weights, dtype=float)
    cons = []
    if edges:
        a = np.zeros((len(edges), n))
        for r, (u, v) in enumerate(edges):
            a[r, u] = a[r, v] = 1.0
        cons.append(LinearConstraint(a, -np.inf, 1.0))
    res = milp(c=c, constraints=cons, integrality=np.ones(n), bounds=Bounds(0, 1))
    if res.status != 0:
        raise RuntimeError(f"stable-set integer program failed: {res.message}")
    return int(round(-res.fun))
