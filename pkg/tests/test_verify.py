import json

from treeparams.constructions import counterexample
from treeparams.graph import complete, cycle, empty
from treeparams.verify import (
    CheckResult,
    check_burling,
    check_completion_chi,
    check_completion_suite,
    check_completion_tw,
    check_crown,
    check_inequalities,
    inequality_values,
    random_graph,
    report_lines,
    run_suite,
    seeded_rng,
)


def test_random_graph_reproducible():
    a = [random_graph(seeded_rng(3, "x"), 1, 8) for _ in range(5)]
    b = [random_graph(seeded_rng(3, "x"), 1, 8) for _ in range(5)]
    assert a == b
    g = random_graph(seeded_rng(0, "y"), 2, 3, require_edge=True)
    assert g.m >= 1 and 2 <= g.n <= 3


def test_pentagon_completion_values():
    v, tds = inequality_values(counterexample("pentagon", 1))
    assert (v["tw"], v["tree_chi"], v["tree_alpha"]) == (4, 2, 2)
    assert v["refutes_question"]


def test_refuting_instance_writes_witnesses(tmp_path):
    r = check_inequalities(counterexample("pentagon", 1), "inequalities/C(C5)", tmp_path)
    assert r.passed
    assert r.values["refutes_question"]
    assert any(p.endswith(".gr") for p in r.witness_paths)
    assert all((tmp_path / p).exists() or __import__("os").path.exists(p) for p in r.witness_paths)


def test_passing_checks_write_nothing(tmp_path):
    r = check_inequalities(complete(4), "inequalities/K4", tmp_path)
    assert r.passed and r.witness_paths == []
    assert list(tmp_path.iterdir()) == []


def test_single_completion_checks():
    assert check_completion_tw(cycle(5)).passed
    assert check_completion_tw(empty(4)).passed
    assert check_completion_chi(cycle(5)).passed


def test_domain_error_becomes_error_status():
    r = check_completion_tw(complete(2))
    assert r.status == "error" and "DomainError" in r.values["error"]


def test_completion_suite_small():
    results = check_completion_suite(max_n=5, samples=5, seed=1)
    assert all(r.passed for r in results), [r for r in results if not r.passed]


def test_crown_checks():
    assert all(r.passed for r in check_crown(range(2, 6)))


def test_burling_checks():
    results = check_burling(4)
    assert len(results) == 12
    assert all(r.passed for r in results), [r for r in results if not r.passed]


def test_report_is_json_lines():
    results = run_suite("crown", max_n=4)
    lines = report_lines(results).splitlines()
    assert len(lines) == 3
    rec = json.loads(lines[0])
    assert set(rec) == {"id", "status", "values", "witness_paths", "ms"}


def test_check_result_serialisation():
    r = CheckResult("x", "pass", {"b": 1, "a": 2})
    assert r.to_json().index('"a"') < r.to_json().index('"b"')
