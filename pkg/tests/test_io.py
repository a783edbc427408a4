import pytest
from hypothesis import given

from lgroot import SymBitMatrix
from lgroot.io import (ParseError, format_edge_list, format_matrix, parse_edge_list, parse_graph_text,
                       parse_matrix, read_graph, read_sections)
from strategies import graphs


@given(graphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(format_edge_list(g, "note\nsecond line")) == g


@given(graphs())
def test_matrix_round_trip(g):
    c = g.adjacency()
    assert parse_matrix(format_matrix(c)) == c


def test_format_sniffing():
    assert parse_graph_text("nodes 2\n0 1\n").edges == ((0, 1),)
    assert parse_graph_text("# m\n2\n0 1\n1 0\n").edges == ((0, 1),)


@pytest.mark.parametrize("text,line,col", [
    ("nodes 3\n0 1\n0 x\n", 3, 3),
    ("nodes 3\n0 5\n", 2, 3),
    ("nodes 3\n1 1\n", 2, 1),
    ("nodes 3\n0 1\n1 0\n", 3, 1),
    ("nodes 3\n0 1 2\n", 2, 1),
    ("edges 3\n", 1, 1),
    ("nodes -1\n", 1, 7),
])
def test_edge_list_diagnostics(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text, "g.el")
    assert (info.value.line, info.value.column) == (line, col)
    assert str(info.value).startswith(f"g.el:{line}:{col}:")


@pytest.mark.parametrize("text,line,col", [
    ("2\n0 1\n0 0\n", 2, 3),
    ("2\n1 0\n0 0\n", 2, 1),
    ("2\n0 2\n2 0\n", 2, 3),
    ("3\n0 1 0\n1 0 0\n", 3, 1),
    ("x\n", 1, 1),
])
def test_matrix_diagnostics(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_matrix(text)
    assert (info.value.line, info.value.column) == (line, col)


def test_sections():
    text = "# header only\n\nnodes 2\n0 1\n\n# second\nnodes 3\n1 2\n"
    gs = read_sections(text)
    assert [g.node_count for g in gs] == [2, 3]


def test_section_error_line_numbers():
    with pytest.raises(ParseError) as info:
        read_sections("nodes 2\n0 1\n\nnodes 2\n0 9\n")
    assert info.value.line == 5


def test_read_graph(tmp_path):
    p = tmp_path / "k2.mat"
    p.write_text(format_matrix(SymBitMatrix.from_edges(2, [(0, 1)])))
    assert read_graph(p).edges == ((0, 1),)
