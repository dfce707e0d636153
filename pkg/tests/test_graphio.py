import pytest

from lexsearch.errors import GraphInputError
from lexsearch.generators import path_graph
from lexsearch.graphio import (
    format_dot,
    format_graph,
    format_ordering,
    parse_graph,
    parse_ordering,
    read_graph,
    write_graph,
)

from helpers import FIXTURES


def test_parse_with_comments_and_names():
    g = parse_graph("# a path\n3 2\n0 1\n\n1 2\nname 0 left\nname 2 right\n")
    assert g == path_graph(3)
    assert g.name(0) == "left" and g.name(1) == "1"
    assert g.vertex("right") == 2


def test_round_trip(tmp_path):
    g = parse_graph("4 3\n0 1\n1 2\n2 3\nname 3 tail end\n")
    p = tmp_path / "g.txt"
    write_graph(g, p)
    back = read_graph(p)
    assert back == g and back.names == g.names
    assert parse_graph(format_graph(g)).name(3) == "tail end"


@pytest.mark.parametrize("text, needle", [
    ("", "header"),
    ("x y\n", "header"),
    ("3 2\n0 1\n", "announces 2 edges"),
    ("3 1\n0 1 2\n", "expected 'u v'"),
    ("3 1\n0 a\n", "non-integer"),
    ("3 1\n0 3\n", "outside 0..2"),
    ("3 1\n1 1\n", "loop"),
    ("3 1\n0 1\nlabel 0 x\n", "name"),
])
def test_parse_errors(text, needle):
    with pytest.raises(GraphInputError, match=needle):
        parse_graph(text)


def test_dot_output():
    dot = format_dot(path_graph(2), "P")
    assert dot.startswith("graph P {") and "0 -- 1;" in dot


def test_ordering_io():
    assert parse_ordering(" 2 0 1\n") == [2, 0, 1]
    assert format_ordering([2, 0, 1]) == "2 0 1"
    with pytest.raises(GraphInputError):
        parse_ordering("0 b")


@pytest.mark.parametrize("name", sorted(p.stem for p in FIXTURES.glob("*.txt")))
def test_fixtures_load(name):
    g = read_graph(FIXTURES / f"{name}.txt")
    assert g.vertex_count > 0 and g.edge_count > 0
