import random

import pytest

from torusk33.generator import (GenSpec, TooLarge, core_histogram, exhaustive_sweep, random_member)
from torusk33.graph import is_2connected


def test_forced_k5():
    spec = GenSpec(weights={"K5": 1}, max_internal=0)
    g, d = random_member(spec)
    assert (g.n, g.m) == (5, 10)
    assert d.core.kind == "K5"


def test_forced_full_triangle_crown():
    spec = GenSpec(weights={"CircularCrown": 1}, crown_lengths=(3, 3), max_internal=0)
    rng = random.Random(0)
    seen = set()
    for _ in range(30):
        g, d = random_member(spec, rng)
        seen.add((g.n, g.m, d.core.substituted))
    assert (12, 27, (0, 1, 2)) in seen


def test_seeded_draws_are_reproducible():
    a = random_member(GenSpec(seed=5), random.Random(5))
    b = random_member(GenSpec(seed=5), random.Random(5))
    assert a == b


def test_members_are_two_connected_and_cover_kinds():
    rng = random.Random(1)
    spec = GenSpec(seed=1)
    draws = [random_member(spec, rng) for _ in range(60)]
    assert all(is_2connected(g) for g, _ in draws)
    assert set(core_histogram(d for _, d in draws)) == {"K5", "MGraph", "MStarGraph", "CircularCrown"}


def test_spec_validation():
    with pytest.raises(ValueError):
        GenSpec(crown_lengths=(2, 4))
    with pytest.raises(ValueError):
        GenSpec(max_internal=5)


def test_sweep_five_vertices():
    r = exhaustive_sweep(5, {10})
    assert r.accepted == 1 and r.histogram["K5"] == 1


def test_sweep_six_vertices_matches_series(table):
    from torusk33.enumeration import toroidal_series
    r = exhaustive_sweep(6, range(6, 16))
    counts = toroidal_series(8, table).counts()
    assert dict(r.accepted_by_edges) == {m: c for (n, m), c in counts.items() if n == 6}
    assert r.examined == sum(1 for _ in range(1 << 15) if 6 <= bin(_).count("1") <= 15)


def test_sweep_too_large():
    with pytest.raises(TooLarge):
        exhaustive_sweep(9, {20})
