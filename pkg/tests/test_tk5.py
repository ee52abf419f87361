import pytest

from torusk33.graph import LabelledGraph, complete_graph, subdivide_edge
from torusk33.planarity import kuratowski_witness
from torusk33.tk5 import (InvalidSubdivision, K5Subdivision, ShortCutPresent, ThreeCornerVertexPresent,
                          classify_toroidality, find_3corner_vertex, find_short_cut, side_components)


def tk5_of(g):
    return K5Subdivision.from_witness(kuratowski_witness(g))


def test_k5_has_ten_trivial_sides():
    g = complete_graph(5)
    comps = side_components(g, tk5_of(g))
    assert len(comps) == 10
    assert all(c.augmented and len(c.edges) == 1 for c in comps)
    assert classify_toroidality(g, comps).kind == "CaseI"


def test_short_cut_found():
    # subdivide 0-1 with vertex 5, then join 5 to corner 2
    g = subdivide_edge(complete_graph(5), (0, 1), 1)
    g = LabelledGraph(g.n, g.edges | {(2, 5)})
    tk = K5Subdivision((0, 1, 2, 3, 4), {**{(a, b): (a, b) for a in range(5) for b in range(a + 1, 5)}, (0, 1): (0, 5, 1)})
    assert find_short_cut(g, tk) == (5, 2)
    with pytest.raises(ShortCutPresent):
        side_components(g, tk)


def test_three_corner_vertex():
    g = complete_graph(5)
    g = LabelledGraph(6, g.edges | {(0, 5), (1, 5), (2, 5)})
    tk = tk5_of(complete_graph(5))
    assert find_3corner_vertex(g, tk) == 5
    with pytest.raises(ThreeCornerVertexPresent) as exc:
        side_components(g, tk)
    assert len(exc.value.paths) == 3


def test_bad_subdivision_rejected():
    g = complete_graph(5)
    tk = K5Subdivision((0, 1, 2, 3, 4), {(0, 1): (0, 1)})
    with pytest.raises(InvalidSubdivision):
        find_short_cut(g, tk)


def test_side_component_grouping():
    # hang a path 0-5-1 next to the corner pair (0, 1)
    g = LabelledGraph(6, complete_graph(5).edges | {(0, 5), (1, 5)})
    comps = side_components(g, tk5_of(complete_graph(5)))
    by_pair = {c.corner_pair: c for c in comps}
    assert by_pair[(0, 1)].vertices() == {0, 1, 5}
    assert classify_toroidality(g, comps).kind == "CaseI"
