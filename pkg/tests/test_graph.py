import pytest

from torusk33.graph import (DisconnectedInput, LabelledGraph, ParseError, block_decomposition, complete_graph,
                            cycle_graph, is_2connected, parse_edge_list, path_graph, subdivide_edge)


def test_edges_are_normalised():
    g = LabelledGraph.from_edges(3, [(2, 0), (1, 2)])
    assert g.sorted_edges() == [(0, 2), (1, 2)]
    assert g.degrees() == [1, 1, 2]


def test_rejects_loops_and_out_of_range():
    with pytest.raises(ValueError):
        LabelledGraph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        LabelledGraph.from_edges(3, [(0, 3)])


def test_parse_round_trip():
    g = complete_graph(5)
    assert parse_edge_list(g.to_edge_list()) == g


@pytest.mark.parametrize("text", ["", "3 1\na b\n", "3 2\n0 1\n", "2 1\n0 5\n", "x"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)


def test_two_connectivity():
    assert is_2connected(cycle_graph(4))
    assert not is_2connected(path_graph(4))
    assert is_2connected(LabelledGraph.from_edges(2, [(0, 1)]))


def test_block_decomposition_of_bowtie():
    g = LabelledGraph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    bt = block_decomposition(g)
    assert len(bt.blocks) == 2
    assert set(bt.cut_vertices) == {2}


def test_block_decomposition_needs_connected_input():
    with pytest.raises(DisconnectedInput):
        block_decomposition(LabelledGraph.from_edges(4, [(0, 1), (2, 3)]))


def test_subdivide_edge():
    g = subdivide_edge(cycle_graph(3), (0, 1), 2)
    assert g.n == 5 and g.m == 5
    assert not g.has_edge(0, 1)
    assert is_2connected(g)


def test_relabel():
    g = path_graph(3)
    h = g.relabel([2, 0, 1])
    assert h.sorted_edges() == [(0, 1), (0, 2)]
