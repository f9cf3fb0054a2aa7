import itertools
import random

import pytest
from hypothesis import assume, given, settings

from conftest import graphs
from treeparams.errors import BudgetExceeded
from treeparams.graph import Graph, complete, cycle, disjoint_union, empty, induced_subgraph, is_stable_set, path
from treeparams.solvers import (
    brute_force_tree_parameter,
    chromatic_number,
    max_stable_set,
    tree_alpha,
    tree_chi,
    tree_parameter,
    tree_tw,
    treewidth,
    treewidth_elimination_dp,
)
from treeparams.solvers.separators import (
    brute_force_pmcs,
    is_pmc,
    minimal_separators,
    potential_maximal_cliques,
)
from treeparams.solvers.stable import brute_force_max_weight_stable_set, components, max_weight_stable_set
from treeparams.treedec import bag_parameter, validate


def chi_by_enumeration(g: Graph) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for rest in itertools.product(range(k), repeat=g.n - 1):
            col = (0, *rest)
            if all(col[u] != col[v] for u, v in g.edges()):
                return k
    raise AssertionError


def alpha_by_enumeration(g: Graph) -> int:
    for r in range(g.n, -1, -1):
        if any(is_stable_set(g, s) for s in itertools.combinations(range(g.n), r)):
            return r
    return 0


# -- known values ------------------------------------------------------------

def test_small_values():
    assert max_stable_set(cycle(5)).value == 2
    assert chromatic_number(cycle(5)).value == 3
    assert chromatic_number(cycle(6)).value == 2
    assert chromatic_number(complete(5)).value == 5
    assert chromatic_number(empty(3)).value == 1
    assert chromatic_number(Graph([], [])).value == 0
    assert treewidth(complete(5)).value == 4
    assert treewidth(cycle(7)).value == 2
    assert treewidth(path(6)).value == 1
    assert treewidth(empty(4)).value == 0
    assert treewidth(Graph([], [])).value == -1


def test_tree_parameters_known():
    assert tree_alpha(cycle(6)).value == 2
    assert tree_alpha(complete(5)).value == 1
    assert tree_chi(complete(5)).value == 5
    # triangulating C_5 leaves bags that induce paths
    assert tree_chi(cycle(5)).value == 2
    assert tree_chi(cycle(6)).value == 2
    assert tree_tw(cycle(5)).value == 1
    assert tree_alpha(empty(3)).value == 1


def test_grid_treewidth():
    # the 3x3 grid has treewidth 3
    idx = lambda r, c: 3 * r + c
    edges = [(idx(r, c), idx(r, c + 1)) for r in range(3) for c in range(2)]
    edges += [(idx(r, c), idx(r + 1, c)) for r in range(2) for c in range(3)]
    assert treewidth(Graph([str(i) for i in range(9)], edges)).value == 3


def test_disconnected_graph():
    g = disjoint_union([complete(4), cycle(5)])
    res = treewidth(g)
    assert res.value == 3
    assert validate(res.witness).ok


def test_guard():
    with pytest.raises(BudgetExceeded):
        tree_alpha(empty(40))
    assert tree_alpha(empty(3), guard=5).value == 1


def test_weighted_mis():
    assert max_stable_set(path(3), [1, 5, 1]).value == 5
    assert max_stable_set(path(3), [3, 5, 3]).value == 6


def test_brute_force_examples():
    assert brute_force_tree_parameter(cycle(4), "alpha").value == 2
    assert brute_force_tree_parameter(cycle(4), "size").value == 2
    assert brute_force_tree_parameter(path(4), "alpha").value == 1
    assert brute_force_tree_parameter(cycle(5), "chi").value == 2
    assert brute_force_tree_parameter(complete(4), "chi").value == 4


def test_minimal_separators_of_cycle():
    g = cycle(5)
    seps = minimal_separators(g.adj, g.all_mask)
    # every non-adjacent pair of C_5 is a minimal separator
    assert len(seps) == 5
    assert all(s.bit_count() == 2 for s in seps)


# -- property tests against independent oracles ------------------------------

@given(graphs(max_n=8))
def test_mis_matches_enumeration(g):
    value, witness = max_weight_stable_set(g.adj, g.all_mask)
    assert value == alpha_by_enumeration(g)
    assert is_stable_set(g, [v for v in range(g.n) if witness >> v & 1])


@given(graphs(max_n=8))
def test_weighted_mis_matches_brute_force(g):
    rng = random.Random(g.m * 31 + g.n)
    w = [rng.randint(0, 9) for _ in range(g.n)]
    value, witness = max_weight_stable_set(g.adj, g.all_mask, w)
    assert value == brute_force_max_weight_stable_set(g.adj, w)
    assert sum(w[v] for v in range(g.n) if witness >> v & 1) == value


@given(graphs(max_n=6))
def test_chi_matches_enumeration(g):
    res = chromatic_number(g)
    assert res.value == chi_by_enumeration(g)
    assert all(res.witness[u] != res.witness[v] for u, v in g.edges())


@given(graphs(max_n=10))
def test_treewidth_matches_elimination_dp(g):
    assert treewidth(g).value == treewidth_elimination_dp(g)


@given(graphs(max_n=7))
def test_pmcs_match_definition(g):
    assume(len(components(g.adj, g.all_mask)) <= 1)
    found = potential_maximal_cliques(g.adj, g.all_mask)
    assert found == brute_force_pmcs(g.adj, g.all_mask)
    for m in found:
        assert is_pmc(g.adj, g.all_mask, m)


@settings(max_examples=25)
@given(graphs(max_n=6))
def test_dp_matches_brute_force(g):
    for measure in ("alpha", "chi", "size"):
        assert tree_parameter(g, measure).value == brute_force_tree_parameter(g, measure).value


@given(graphs(min_n=1, max_n=8))
def test_witnesses_certify_values(g):
    for measure in ("size", "alpha", "chi", "tw"):
        res = tree_parameter(g, measure)
        assert validate(res.witness).ok
        val = bag_parameter(res.witness, measure)[0]
        assert (val - 1 if measure == "size" else val) == res.value


@given(graphs(min_n=1, max_n=8))
def test_parameter_chain(g):
    tw = treewidth(g).value
    ta, tc, ttw = tree_alpha(g).value, tree_chi(g).value, tree_tw(g).value
    alpha, chi = max_stable_set(g).value, chromatic_number(g).value
    assert 1 <= ta <= alpha
    assert tc <= chi <= tw + 1
    assert ttw <= tw
    assert tw + 1 <= alpha * tc
    assert tw + 1 <= ta * chi
    assert tw + 1 <= ta * ta * tc


@given(graphs(max_n=7))
def test_monotone_under_induced_subgraphs(g):
    if g.n == 0:
        return
    sub = induced_subgraph(g, range(g.n - 1))
    for measure in ("size", "alpha", "chi", "tw"):
        assert tree_parameter(sub, measure).value <= tree_parameter(g, measure).value
