import pytest
from hypothesis import given

from conftest import graphs
from treeparams import io
from treeparams.errors import MalformedInput
from treeparams.graph import WeightFunction, cycle
from treeparams.solvers import treewidth


@given(graphs())
def test_graph_round_trip(g):
    assert io.parse_graph(io.format_graph(g)) == g


@given(graphs(min_n=1, max_n=6))
def test_td_round_trip(g):
    td = treewidth(g).witness
    assert io.parse_td(io.format_td(td), g) == td


def test_graph_format_header():
    text = io.format_graph(cycle(3))
    assert text.splitlines()[0] == "p tw 3 3"
    assert "1 2" in text.splitlines()


@pytest.mark.parametrize("text", [
    "",
    "p tw 2 1\n1 3\n",
    "p tw 2 2\n1 2\n",
    "p tw x 1\n",
    "1 2\n",
    "p tw 2 1\n1 1\n",
])
def test_malformed_graphs(text):
    with pytest.raises(MalformedInput):
        io.parse_graph(text)


def test_malformed_td():
    g = cycle(3)
    with pytest.raises(MalformedInput):
        io.parse_td("s td 1 3 3\nb 1 1 2 9\n", g)
    with pytest.raises(MalformedInput):
        io.parse_td("garbage\n", g)


def test_family_round_trip():
    fam = [frozenset({0, 2}), frozenset(), frozenset({1})]
    assert io.parse_family(io.format_family(fam, "x")) == fam


def test_weights_round_trip():
    w = WeightFunction((0, 3, 5))
    text = io.format_weights(w, 4, 8, "abc")
    w2, meta = io.parse_weights(text)
    assert w2 == w
    assert meta == {"bound": 4, "target": 8, "graph": "abc"}


def test_atomic_write(tmp_path):
    p = tmp_path / "sub" / "f.gr"
    p.parent.mkdir()
    io.write_graph(cycle(4), p)
    assert io.read_graph(p) == cycle(4)
    assert [x.name for x in p.parent.iterdir()] == ["f.gr"]


def test_graph_hash_stable():
    assert io.graph_hash(cycle(5)) == io.graph_hash(cycle(5))
    assert io.graph_hash(cycle(5)) != io.graph_hash(cycle(6))
