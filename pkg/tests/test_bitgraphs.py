import random

import networkx as nx
import numpy as np
import pytest

from torusk33 import bitgraphs as bg
from torusk33.graph import LabelledGraph, is_2connected
from torusk33.planarity import is_planar


def test_masks_with_popcount():
    ms = bg.masks_with_popcount(6, 2)
    assert len(ms) == 15
    assert all(bin(int(m)).count("1") == 2 for m in ms)
    assert list(ms) == sorted(ms)


def test_popcount():
    a = np.array([0, 1, 3, 255, 2**27 + 1], dtype=np.uint32)
    assert bg.popcount(a).tolist() == [0, 1, 2, 8, 2]


@pytest.mark.parametrize("n", [4, 5, 6])
def test_exhaustive_agreement_with_networkx(n):
    masks = bg.all_masks(n)
    bic = bg.biconnected(masks, n)
    pl = bg.planar_by_minors(masks, n)
    pat = bg.planar_small(masks, n)
    for msk in range(len(masks)):
        g = bg.graph_of(n, msk)
        spans = len({x for e in g.edges for x in e}) == n
        assert bool(bic[msk]) == (spans and is_2connected(g)), msk
        assert bool(pl[msk]) == is_planar(g.edges) == bool(pat[msk]), msk


def test_seven_vertex_samples():
    rng = random.Random(5)
    masks = np.array([rng.randrange(1 << 21) for _ in range(400)], dtype=np.uint32)
    pl = bg.planar_table(7)[masks]
    bic = bg.biconnected(masks, 7)
    for msk, p, b in zip(masks.tolist(), pl, bic):
        g = bg.graph_of(7, msk)
        h = nx.Graph(list(g.edges))
        h.add_nodes_from(range(7))
        assert bool(p) == nx.check_planarity(h)[0]
        assert bool(b) == nx.is_biconnected(h)


def test_seven_vertex_tables_agree():
    masks = bg.all_masks(7)
    assert np.array_equal(bg.planar_table(7), bg.planar_small(masks, 7))


def test_pattern_counts():
    # K5 on 5 of 6 vertices, plus one subdivided edge through the sixth
    assert len(bg.subdivision_patterns(6, "K5")) == 6 + 6 * 10
    assert len(bg.subdivision_patterns(6, "K33")) == 10
    assert len(bg.subdivision_patterns(8, "K33", 0)) == 280


def test_mask_round_trip():
    g = LabelledGraph.from_edges(5, [(0, 1), (3, 4), (1, 4)])
    assert bg.graph_of(5, bg.mask_of(5, g.edges)) == g
