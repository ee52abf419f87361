from math import factorial

import pytest

from torusk33 import planar_networks as pn


def test_small_rows(table):
    assert table.p[2] == {1: 1}
    assert table.p[3] == {3: 1}
    assert table.p[4] == {4: 3, 5: 6, 6: 1}


def test_row_totals(table):
    # labelled 2-connected planar graphs on 2..7 vertices
    assert [sum(table.p[n].values()) for n in range(2, 8)] == [1, 1, 10, 237, 10707, 774924]


def test_rows_respect_edge_range(table):
    for n in range(3, 8):
        assert min(table.p[n]) == n and max(table.p[n]) == 3 * n - 6


def test_over_cap():
    with pytest.raises(pn.NOverCap):
        pn.sweep_planar(9)
    with pytest.raises(pn.NOverCap):
        pn.count_2connected_planar(9)


def test_network_series_small(table):
    ns = pn.planar_network_series(3, table)

    def row(k):
        return {e[0]: int(c * factorial(k)) for e, c in ns.coeffs[k].items()}

    assert row(0) == {1: 1}
    assert row(1) == {2: 1, 3: 1}
    assert row(2) == {3: 2, 4: 7, 5: 6, 6: 1}


def test_network_series_needs_table(table):
    with pytest.raises(pn.InsufficientTable):
        pn.planar_network_series(6, table)


@pytest.mark.parametrize("k", range(5))
def test_networks_match_series(table, k):
    ns = pn.planar_network_series(4, table)
    want = {e[0]: int(c * factorial(k)) for e, c in ns.coeffs[k].items()}
    assert pn.network_counts(k) == want


def test_networks_closed_under_pole_swap():
    for k in range(4):
        nets = set(pn.enumerate_networks(k))
        for net in nets:
            # swapping the poles and exchanging their labels gives another listed network
            f = {v: v for v in net.vertices()}
            f[k], f[k + 1] = k + 1, k
            assert net.swapped().relabel(f) in nets


def test_enumeration_limits():
    assert len(pn.enumerate_networks(0)) == 1
    assert len(pn.enumerate_networks(2)) == 16
    with pytest.raises(pn.TooLarge):
        pn.enumerate_networks(5)


def test_irreducible_networks_small(table):
    ni = pn.irreducible_network_series(3, table)
    assert ni.coeffs[0] == {(1,): 1}
    assert ni.coeffs[1] == {}
    assert {e[0]: c * 2 for e, c in ni.coeffs[2].items()} == {5: 1, 6: 1}


def test_irreducible_networks_match_filtered_enumeration(table):
    ni = pn.irreducible_network_series(4, table)
    for k in range(5):
        counts = {}
        for net in pn.enumerate_networks(k):
            deg = {}
            for u, v in net.edges:
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            if all(deg[v] >= 3 for v in net.internal()):
                counts[net.m] = counts.get(net.m, 0) + 1
        assert counts == {e[0]: int(c * factorial(k)) for e, c in ni.coeffs[k].items()}


def test_cache_round_trip(tmp_path, table):
    path = tmp_path / "counts.txt"
    table.capped(6).save(path)
    back = pn.PlanarCountTable.load(path)
    assert back.p == table.capped(6).p
    assert back.q == table.capped(6).q


def test_corrupted_cache_detected(tmp_path, table):
    path = tmp_path / "counts.txt"
    table.capped(6).save(path)
    text = path.read_text().replace("5 7 100", "5 7 101")
    path.write_text(text)
    with pytest.raises(pn.CacheValidationError):
        pn.PlanarCountTable.load(path)


def test_load_table_fills_missing_rows(tmp_path, table):
    path = tmp_path / "counts.txt"
    table.capped(5).save(path)
    t = pn.load_table(6, cache=path)
    assert t.p[6] == table.p[6]
    assert pn.PlanarCountTable.load(path).n_cap == 6
