"""Instance construction: named graphs, seeded random members, exhaustive sweeps."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .graph import LabelledGraph, norm_edge
from .planarity import Network
from .recognizer import CoreKind, Decomposition, canonicalize, compose, core_graph

_A, _B = -1, -2


def single_edge() -> Network:
    return Network(frozenset({norm_edge(_A, _B)}), _A, _B)


def compose_plain(core: CoreKind) -> LabelledGraph:
    """The core itself: every core edge carries the single-edge network."""
    n, es = core_graph(core)
    return compose(core, [single_edge()] * len(es), list(range(n)))


K5 = CoreKind("K5")
M_GRAPH = CoreKind("MGraph")
M_STAR = CoreKind("MStarGraph")


def m_graph() -> LabelledGraph:
    return compose_plain(M_GRAPH)


def m_star_graph() -> LabelledGraph:
    return compose_plain(M_STAR)


def crown(i: int, substituted: Sequence[int]) -> LabelledGraph:
    return compose_plain(CoreKind("CircularCrown", i, tuple(substituted)))


def fig5_graph() -> LabelledGraph:
    """K5 minus edge ab, closed up by K3,3 minus an edge across the poles a=0, b=1."""
    es = [(u, v) for u in range(5) for v in range(u + 1, 5) if (u, v) != (0, 1)]
    # K3,3 parts {0, 5, 6} and {1, 7, 8} without the edge 0-1
    es += [(0, 7), (0, 8), (5, 1), (5, 7), (5, 8), (6, 1), (6, 7), (6, 8)]
    return LabelledGraph.from_edges(9, es)


def k5s_sharing_edge(k: int = 3) -> LabelledGraph:
    """``k`` copies of K5 glued along the common edge 0-1."""
    es = {(0, 1)}
    nxt = 2
    for _ in range(k):
        quint = (0, 1, nxt, nxt + 1, nxt + 2)
        nxt += 3
        es |= {norm_edge(x, y) for x in quint for y in quint if x < y}
    return LabelledGraph(nxt, frozenset(es))


# ---------------------------------------------------------------------------
# random members

@dataclass
class GenSpec:
    weights: dict[str, float] = field(default_factory=lambda: {"K5": 1, "MGraph": 1, "MStarGraph": 1, "CircularCrown": 2})
    crown_lengths: tuple[int, int] = (3, 6)
    max_internal: int = 3
    p_trivial: float = 0.7
    seed: int = 0

    def __post_init__(self):
        if self.crown_lengths[0] < 3 or self.crown_lengths[1] < self.crown_lengths[0]:
            raise ValueError("crown lengths must be >= 3")
        if not 0 <= self.max_internal <= 4:
            raise ValueError("components are drawn from pools with at most 4 internal vertices")


@lru_cache(maxsize=None)
def _pool(k: int) -> tuple[Network, ...]:
    from .planar_networks import enumerate_networks
    return tuple(enumerate_networks(k))


def random_crown_core(rng: random.Random, lo: int, hi: int) -> CoreKind:
    i = rng.randint(lo, hi)
    while True:
        subs = tuple(k for k in range(i) if rng.random() < 0.6)
        try:
            return CoreKind("CircularCrown", i, subs)
        except ValueError:
            continue


def random_member(spec: GenSpec, rng: random.Random | None = None) -> tuple[LabelledGraph, Decomposition]:
    """A class member together with its decomposition (not uniform over the class)."""
    rng = rng or random.Random(spec.seed)
    kinds = sorted(spec.weights)
    kind = rng.choices(kinds, weights=[spec.weights[k] for k in kinds])[0]
    if kind == "CircularCrown":
        core = random_crown_core(rng, *spec.crown_lengths)
    else:
        core = CoreKind(kind)
    n_core, edges = core_graph(core)
    templates = []
    for _ in edges:
        if spec.max_internal == 0 or rng.random() < spec.p_trivial:
            templates.append(single_edge())
        else:
            k = rng.randint(1, spec.max_internal)
            templates.append(rng.choice(_pool(k)))
    n = n_core + sum(t.n_internal for t in templates)
    labels = list(range(n))
    rng.shuffle(labels)
    host = labels[:n_core]
    free = iter(labels[n_core:])
    comps = []
    for (u, v), t in zip(edges, templates):
        if rng.random() < 0.5:
            t = t.swapped()
        f = {t.a: _A, t.b: _B}
        for w in sorted(t.internal()):
            f[w] = next(free)
        comps.append(t.relabel(f))
    g = compose(core, comps, host)
    placed = []
    for (u, v), c in zip(edges, comps):
        f = {c.a: host[u], c.b: host[v]}
        placed.append(c.relabel({**{w: w for w in c.internal()}, **f}).canonical())
    return g, canonicalize(Decomposition(core, tuple(host), tuple(placed)))


def random_relabelling(n: int, rng: random.Random) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def core_histogram(decomps) -> Counter:
    return Counter(d.core.kind for d in decomps)


# ---------------------------------------------------------------------------
# exhaustive sweep

class TooLarge(ValueError):
    pass


@dataclass
class SweepResult:
    n: int
    edge_counts: tuple[int, ...]
    examined: int = 0
    recognized: int = 0  # graphs handed to the recognizer
    accepted: int = 0
    histogram: Counter = field(default_factory=Counter)
    accepted_by_edges: Counter = field(default_factory=Counter)
    rejections: Counter = field(default_factory=Counter)
    max_edges: dict = field(default_factory=dict)


def _sweep_masks(n: int, m: int, chunk: int):
    from . import bitgraphs as bg
    masks = bg.masks_with_popcount(len(bg.pairs(n)), m)
    for lo in range(0, len(masks), chunk):
        yield masks[lo:lo + chunk]


def exhaustive_sweep(n: int, m_filter, prefilter: bool = True, chunk: int = 1 << 21) -> SweepResult:
    """Recognize every labelled graph on ``n`` vertices with an edge count in ``m_filter``.

    Graphs that are not 2-connected or are planar are rejected by vectorised
    tests, as are graphs containing K3,3 as a subgraph or a K3,3 subdivision
    on at most ``n`` vertices when ``prefilter`` is set.  Each of those is a
    certificate of non-membership; the recognizer runs on everything else.
    """
    from . import bitgraphs as bg
    from .recognizer import RecognitionError, recognize

    if n > 8:
        raise TooLarge("the exhaustive sweep is limited to 8 vertices")
    res = SweepResult(n, tuple(sorted(m_filter)))
    if n < 5:
        return res
    k33 = []
    if prefilter and n >= 6:
        prev: set[int] = set()
        for s in range(n - 5):
            level = set(bg.subdivision_patterns(n, "K33", s))
            k33.append(sorted(level - prev))
            prev = level
    for m in res.edge_counts:
        for masks in _sweep_masks(n, m, chunk):
            res.examined += len(masks)
            masks = masks[bg.degrees(masks, n).min(axis=0) >= 2]
            keep = bg.biconnected(masks, n)
            res.rejections["NotTwoConnected"] += int((~keep).sum())
            masks = masks[keep]
            keep = ~bg.planar_by_minors(masks, n)
            res.rejections["PlanarInput"] += int((~keep).sum())
            masks = masks[keep]
            for pats in k33:
                hit = bg.contains_any(masks, pats)
                res.rejections["ContainsK33"] += int(hit.sum())
                masks = masks[~hit]
            for msk in masks.tolist():
                g = bg.graph_of(n, msk)
                res.recognized += 1
                try:
                    d = recognize(g, witness=False)
                except RecognitionError as exc:
                    res.rejections[type(exc).__name__] += 1
                    continue
                res.accepted += 1
                res.histogram[d.core.kind] += 1
                res.accepted_by_edges[g.m] += 1
                res.max_edges[n] = max(res.max_edges.get(n, 0), g.m)
    # masks dropped by the degree filter are not 2-connected either
    res.rejections["NotTwoConnected"] += res.examined - sum(res.rejections.values()) - res.recognized
    return res
