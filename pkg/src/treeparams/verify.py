"""Named, reproducible checks of the completion, crown, Burling and inequality claims.

Each check returns a :class:`CheckResult`; a suite run is a list of them and
serialises to JSON lines.  All randomness comes from ``random.Random`` seeded
with ``"<seed>:<stream>"`` strings, so results depend only on the arguments.
"""

from __future__ import annotations

import json
import math
import random
import re
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Iterable

from . import io
from .constructions import (
    blowup_burling,
    burling,
    burling_counts,
    burling_star_forest_decomposition,
    burling_weighting,
    completion_lift_decomposition,
    completion_star_decomposition,
    crown_decomposition,
    max_weight_stable_set_milp,
    one_completion,
    stable_bound,
    verify_weighting,
    weight_total,
)
from .errors import TreeParamsError
from .graph import Graph, complete, cycle, empty, is_stable_set
from .solvers import (
    chromatic_number,
    max_stable_set,
    tree_alpha,
    tree_chi,
    tree_tw,
    treewidth,
)
from .solvers.coloring import two_coloring
from .treedec import BagMeasure, TreeDecomposition, bag_parameter, is_star_forest, pullback, validate

EDGE_PROBABILITIES = (0.2, 0.5, 0.8)
SUITES = ("completion", "crown", "burling", "inequalities", "all")


@dataclass
class CheckResult:
    id: str
    status: str  # "pass" | "fail" | "error"
    values: dict = field(default_factory=dict)
    witness_paths: list = field(default_factory=list)
    ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def random_graph(rng: random.Random, n_lo: int, n_hi: int, require_edge: bool = False) -> Graph:
    """Erdos-Renyi graph; ``n`` uniform in ``[n_lo, n_hi]``, ``p`` drawn from
    ``EDGE_PROBABILITIES``; resampled until it has an edge if required."""
    while True:
        n = rng.randint(n_lo, n_hi)
        p = rng.choice(EDGE_PROBABILITIES)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        if edges or not require_edge:
            return Graph([str(i) for i in range(n)], edges)


def seeded_rng(seed: int, stream: str) -> random.Random:
    return random.Random(f"{seed}:{stream}")


def _safe(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.=-]+", "_", name)


def _write_witness(witness_dir, check_id: str, graph: Graph | None, tds: dict) -> list[str]:
    if witness_dir is None:
        return []
    base = Path(witness_dir) / _safe(check_id)
    paths = []
    if graph is not None:
        p = base.with_suffix(".gr")
        io.write_graph(graph, p)
        paths.append(str(p))
    for tag, td in tds.items():
        if td is None:
            continue
        p = Path(f"{base}.{tag}.td")
        io.write_td(td, p)
        paths.append(str(p))
    return paths


def _run(check_id: str, body: Callable[[dict, dict], tuple[bool, Graph | None]], witness_dir=None) -> CheckResult:
    """Run ``body(values, tds)``; it fills ``values``/``tds`` and returns
    ``(ok, graph)``.  Failures and errors write the graph and decompositions."""
    values: dict = {}
    tds: dict = {}
    start = time.perf_counter()
    graph = None
    try:
        ok, graph = body(values, tds)
        status = "pass" if ok else "fail"
    except TreeParamsError as exc:
        status = "error"
        values["error"] = f"{type(exc).__name__}: {exc}"
    ms = round((time.perf_counter() - start) * 1000, 1)
    paths = []
    if status != "pass" or values.get("refutes_question"):
        paths = _write_witness(witness_dir, check_id, graph or values.pop("_graph", None), tds)
    values.pop("_graph", None)
    return CheckResult(check_id, status, values, paths, ms)


# -- 1-completions ------------------------------------------------------------

def _completion_tw(h: Graph, values: dict, tds: dict) -> tuple[bool, Graph]:
    c = one_completion(h).graph
    values["_graph"] = c
    n = h.n
    tw = treewidth(c)
    ta = tree_alpha(c)
    alpha = max_stable_set(h).value
    star = completion_star_decomposition(h)
    star_ok = validate(star).ok
    star_alpha = bag_parameter(star, BagMeasure.ALPHA)[0] if star_ok else None
    # a complete H gives a single bag, otherwise the leaves contribute P_3's
    expected_star_alpha = alpha if h.m == n * (n - 1) // 2 else max(alpha, 2)
    values.update(
        n=n, tw=tw.value, expected_tw=n - 1, tree_alpha=ta.value, alpha=alpha,
        star_width=star.width(), star_alpha=star_alpha,
    )
    tds.update(tw=tw.witness, tree_alpha=ta.witness, star=star)
    ok = (
        tw.value == n - 1
        and ta.value <= alpha
        and star_ok
        and star.width() == n - 1
        and star_alpha == expected_star_alpha
    )
    return ok, c


def _completion_sandwich(h: Graph, values: dict, tds: dict) -> tuple[bool, Graph]:
    c = one_completion(h).graph
    values["_graph"] = c
    ta = tree_alpha(c)
    alpha = max_stable_set(h).value
    values.update(n=h.n, tree_alpha=ta.value, alpha=alpha)
    tds["tree_alpha"] = ta.witness
    return alpha - 1 <= ta.value <= alpha, c


def _completion_chi(h: Graph, values: dict, tds: dict) -> tuple[bool, Graph]:
    c = one_completion(h).graph
    values["_graph"] = c
    th = tree_chi(h)
    tc = tree_chi(c)
    lifted = completion_lift_decomposition(h, th.witness)
    lift_ok = validate(lifted).ok
    lift_chi = bag_parameter(lifted, BagMeasure.CHI)[0] if lift_ok else None
    values.update(n=h.n, tree_chi_H=th.value, tree_chi_CH=tc.value, lift_chi=lift_chi)
    tds.update(tree_chi_H=th.witness, tree_chi_CH=tc.witness, lift=lifted)
    ok = tc.value == th.value and lift_ok and lift_chi == max(2, th.value)
    return ok, c


def check_completion_tw(h: Graph, check_id: str = "completion-tw", witness_dir=None) -> CheckResult:
    """tw(C(H)) = |V(H)| - 1, tree-alpha(C(H)) <= alpha(H), and the star
    decomposition has width |V(H)| - 1.  Needs |V(H)| >= 3."""
    return _run(check_id, lambda v, t: _completion_tw(h, v, t), witness_dir)


def check_completion_sandwich(h: Graph, check_id: str = "completion-sandwich", witness_dir=None) -> CheckResult:
    """alpha(H) - 1 <= tree-alpha(C(H)) <= alpha(H).  Needs |V(H)| >= 3."""
    return _run(check_id, lambda v, t: _completion_sandwich(h, v, t), witness_dir)


def check_completion_chi(h: Graph, check_id: str = "completion-chi", witness_dir=None) -> CheckResult:
    """tree-chi(C(H)) = tree-chi(H), and the lifted witness decomposition
    has chi measure max(2, tree-chi(H)).  Needs an edge."""
    return _run(check_id, lambda v, t: _completion_chi(h, v, t), witness_dir)


def check_completion_suite(max_n: int = 6, samples: int = 20, seed: int = 0, witness_dir=None) -> list[CheckResult]:
    """Fixed and random-instance checks of the 1-completion claims.

    ``samples`` graphs per check: treewidth/tree-alpha and the tree-alpha
    sandwich use ``3 <= |V(H)| <= max_n``; tree-chi uses graphs with at least
    one edge and ``2 <= |V(H)| <= max_n``.  Fixed instances C_5, K_4 and the
    edgeless graph on 4 vertices are checked first.
    """
    results = []
    for name, h in (("C5", cycle(5)), ("K4", complete(4)), ("E4", empty(4))):
        results.append(check_completion_tw(h, f"completion-tw/{name}", witness_dir))
        results.append(check_completion_sandwich(h, f"completion-sandwich/{name}", witness_dir))
        if h.m:
            results.append(check_completion_chi(h, f"completion-chi/{name}", witness_dir))
    rng = seeded_rng(seed, "completion-tw")
    for i in range(samples):
        results.append(check_completion_tw(random_graph(rng, 3, max_n), f"completion-tw/rand{i}", witness_dir))
    rng = seeded_rng(seed, "completion-sandwich")
    for i in range(samples):
        results.append(check_completion_sandwich(random_graph(rng, 3, max_n), f"completion-sandwich/rand{i}", witness_dir))
    rng = seeded_rng(seed, "completion-chi")
    for i in range(samples):
        h = random_graph(rng, 2, max_n, require_edge=True)
        results.append(check_completion_chi(h, f"completion-chi/rand{i}", witness_dir))
    return results


# -- crown ----------------------------------------------------------------------

def _crown(n: int, values: dict, tds: dict) -> tuple[bool, Graph]:
    g = one_completion(empty(n)).graph
    ta = tree_alpha(g)
    values.update(n=n, tree_alpha=ta.value, expected=n - 1)
    tds["tree_alpha"] = ta.witness
    ok = ta.value == n - 1
    if n >= 3:
        crown = crown_decomposition(n)
        tds["crown"] = crown
        crown_ok = validate(crown).ok
        crown_alpha = bag_parameter(crown, BagMeasure.ALPHA)[0] if crown_ok else None
        values.update(crown_alpha=crown_alpha, crown_nodes=crown.num_nodes)
        ok = ok and crown_ok and crown_alpha == n - 1
    return ok, g


def check_crown(n_range: Iterable[int] = range(2, 7), witness_dir=None) -> list[CheckResult]:
    return [_run(f"crown/n={n}", lambda v, t, n=n: _crown(n, v, t), witness_dir) for n in n_range]


# -- Burling ------------------------------------------------------------------

def _burling_decomposition(n: int, values: dict, tds: dict) -> tuple[bool, Graph]:
    lvl = burling(n)
    g = lvl.graph
    td = burling_star_forest_decomposition(n)
    tds["star_forest"] = td
    v_exp, s_exp = burling_counts(n)
    report = validate(td)
    stars = all(is_star_forest(g, b) for b in td.bags)
    covered = all(any(s <= b for b in td.bags) for s in lvl.family)
    stable = all(is_stable_set(g, s) for s in lvl.family)
    values.update(
        n=n, vertices=g.n, sets=lvl.n_sets, nodes=td.num_nodes, valid=report.ok,
        star_forest=stars, covered=covered, family_stable=stable,
    )
    ok = (
        report.ok and stars and covered and stable
        and g.n == v_exp and lvl.n_sets == s_exp == stable_bound(n)
    )
    return ok, g


def _burling_weights(k: int, values: dict, tds: dict) -> tuple[bool, Graph]:
    g = burling(k).graph
    w = burling_weighting(k)
    bound, target = stable_bound(k), weight_total(k)
    ok_bb, mis_bb = verify_weighting(g, w, bound, target)
    mis_ip = max_weight_stable_set_milp(g, w.weights)
    values.update(k=k, total=w.total, target=target, bound=bound, mis_branch_bound=mis_bb, mis_integer_program=mis_ip)
    return ok_bb and mis_ip == mis_bb and mis_ip <= bound, g


def _burling_blowup(k: int, values: dict, tds: dict) -> tuple[bool, Graph]:
    h, proj = blowup_burling(k)
    values["_graph"] = h
    size = h.n
    values.update(k=k, vertices=size, expected=weight_total(k))
    ok = size == weight_total(k) and proj.is_valid()
    if size <= 64:
        alpha = max_stable_set(h).value
    else:
        # every stable set of the blowup lies in the classes of a stable set of G_k
        alpha = max_stable_set(burling(k).graph, burling_weighting(k)).value
    values["alpha"] = alpha
    ok = ok and alpha * (k + 1) <= 2 * size
    # tree-alpha(C(H_k)): exact when small enough, otherwise only the sandwich
    c_size = size + size * (size - 1) // 2 - h.m
    if 3 <= size and c_size <= 30:
        ta = tree_alpha(one_completion(h).graph).value
        values["completion_tree_alpha"] = ta
        ok = ok and alpha - 1 <= ta <= alpha
    else:
        values["completion_tree_alpha"] = None
    values["completion_tree_alpha_bounds"] = [max(alpha - 1, 1), alpha]
    if size >= 3:
        ok = ok and alpha < 4 * size / math.log2(math.log2(size))

    base_td = burling_star_forest_decomposition(k)
    pulled = pullback(base_td, proj)
    tds["pullback"] = pulled
    bags_bipartite = all(two_coloring(h.adj, m) is not None for m in pulled.bag_masks())
    lower = 2 if h.m else 1
    values.update(pullback_valid=validate(pulled).ok, pullback_bags_bipartite=bags_bipartite, lower_bound=lower)
    ok = ok and bags_bipartite
    if size <= 30:
        tc = tree_chi(h)
        tds["tree_chi"] = tc.witness
        values["tree_chi"] = tc.value
        values["method"] = "exact"
        ok = ok and tc.value == lower
    else:
        values["tree_chi"] = 2 if lower == 2 else None
        values["method"] = "pullback upper bound, edge lower bound"
    # H_1 is a single vertex, so only k >= 2 has tree-chi exactly 2
    if k >= 2:
        ok = ok and values["tree_chi"] == 2
    return ok, h


def check_burling(n_max: int = 4, witness_dir=None) -> list[CheckResult]:
    results = []
    for n in range(1, n_max + 1):
        results.append(_run(f"burling-decomposition/n={n}", lambda v, t, n=n: _burling_decomposition(n, v, t), witness_dir))
    for k in range(1, n_max + 1):
        results.append(_run(f"burling-weighting/k={k}", lambda v, t, k=k: _burling_weights(k, v, t), witness_dir))
    for k in range(1, n_max + 1):
        results.append(_run(f"burling-blowup/k={k}", lambda v, t, k=k: _burling_blowup(k, v, t), witness_dir))
    return results


# -- inequalities -------------------------------------------------------------

def inequality_values(g: Graph) -> tuple[dict, dict]:
    """All six parameters of ``g`` plus the derived inequality flags."""
    tw, ta, tc, ttw = treewidth(g), tree_alpha(g), tree_chi(g), tree_tw(g)
    alpha, chi = max_stable_set(g).value, chromatic_number(g).value
    v = dict(
        n=g.n, tw=tw.value, alpha=alpha, chi=chi,
        tree_alpha=ta.value, tree_chi=tc.value, tree_tw=ttw.value,
    )
    v["refutes_question"] = tw.value + 1 > ta.value * tc.value
    v["treealpha2_treechi"] = tw.value + 1 <= ta.value ** 2 * tc.value
    v["treetw_product"] = ttw.value + 1 <= ta.value * tc.value
    v["alpha_treechi"] = tw.value + 1 <= alpha * tc.value
    v["treealpha_chi"] = tw.value + 1 <= ta.value * chi
    v["chi_tw"] = chi <= tw.value + 1
    v["monotone"] = tc.value <= chi and ta.value <= alpha and ttw.value <= tw.value
    tds = dict(tw=tw.witness, tree_alpha=ta.witness, tree_chi=tc.witness, tree_tw=ttw.witness)
    return v, tds


_INEQUALITY_FLAGS = ("treealpha2_treechi", "treetw_product", "alpha_treechi", "treealpha_chi", "chi_tw", "monotone")


def check_inequalities(g: Graph, check_id: str = "inequalities", witness_dir=None) -> CheckResult:
    """Pass iff every proved inequality holds; ``refutes_question`` is reported,
    and witnesses are written whenever it is true."""

    def body(values: dict, tds: dict):
        v, t = inequality_values(g)
        values.update(v)
        tds.update(t)
        return all(v[k] for k in _INEQUALITY_FLAGS), g

    return _run(check_id, body, witness_dir)


def check_inequality_suite(samples: int = 200, max_n: int = 8, seed: int = 0, witness_dir=None) -> list[CheckResult]:
    from .constructions import counterexample

    results = [
        check_inequalities(counterexample("pentagon", 1), "inequalities/C(C5)", witness_dir),
        check_inequalities(complete(4), "inequalities/K4", witness_dir),
    ]
    rng = seeded_rng(seed, "inequalities")
    for i in range(samples):
        results.append(check_inequalities(random_graph(rng, 1, max_n), f"inequalities/rand{i}", witness_dir))
    return results


def run_suite(suite: str = "all", seed: int = 0, max_n: int | None = None, samples: int | None = None, witness_dir=None) -> list[CheckResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    out: list[CheckResult] = []
    if suite in ("completion", "all"):
        out += check_completion_suite(max_n or 6, samples or 20, seed, witness_dir)
    if suite in ("crown", "all"):
        out += check_crown(range(2, (max_n or 6) + 1), witness_dir)
    if suite in ("burling", "all"):
        out += check_burling(min(max_n or 4, 4), witness_dir)
    if suite in ("inequalities", "all"):
        out += check_inequality_suite(samples or 200, max_n or 8, seed, witness_dir)
    return out


def report_lines(results: Iterable[CheckResult]) -> str:
    return "".join(r.to_json() + "\n" for r in results)
