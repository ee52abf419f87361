"""Vectorised predicates over arrays of graphs encoded as edge bitmasks.

A graph on vertices ``0..n-1`` is an integer whose bit ``k`` says whether
the k-th pair of :func:`pairs` is an edge.  All predicates take a numpy
array of such masks and return a boolean array; they are used by the
exhaustive sweeps, where per-graph Python calls would be far too slow.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import numpy as np

from .graph import LabelledGraph, norm_edge


@lru_cache(maxsize=None)
def pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=None)
def pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: i for i, p in enumerate(pairs(n))}


def mask_of(n: int, edges) -> int:
    idx = pair_index(n)
    out = 0
    for u, v in edges:
        out |= 1 << idx[norm_edge(u, v)]
    return out


def graph_of(n: int, mask: int) -> LabelledGraph:
    ps = pairs(n)
    return LabelledGraph(n, frozenset(ps[k] for k in range(len(ps)) if mask >> k & 1))


def _dtype(n: int):
    return np.uint32 if len(pairs(n)) <= 32 else np.uint64


def masks_with_popcount(n_bits: int, k: int, dtype=np.uint32) -> np.ndarray:
    """All ``n_bits``-bit integers with exactly ``k`` ones, ascending."""
    if k < 0 or k > n_bits:
        return np.zeros(0, dtype=dtype)
    # row[j] holds the j-bit masks for the current bit count
    prev = [np.zeros(1, dtype=dtype) for _ in range(n_bits + 1)]
    for c in range(1, k + 1):
        cur = [np.zeros(0, dtype=dtype) for _ in range(n_bits + 1)]
        for j in range(c, n_bits + 1):
            top = dtype(1) << dtype(j - 1)
            cur[j] = np.concatenate([cur[j - 1], prev[j - 1] | top])
        prev = cur
    return prev[n_bits]


def popcount(a: np.ndarray) -> np.ndarray:
    a = a.astype(np.uint64)
    a = a - ((a >> np.uint64(1)) & np.uint64(0x5555555555555555))
    a = (a & np.uint64(0x3333333333333333)) + ((a >> np.uint64(2)) & np.uint64(0x3333333333333333))
    a = (a + (a >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return ((a * np.uint64(0x0101010101010101)) >> np.uint64(56)).astype(np.int64)


def degrees(masks: np.ndarray, n: int) -> np.ndarray:
    """Shape (n, len(masks)) degree table."""
    deg = np.zeros((n, len(masks)), dtype=np.int8)
    for k, (u, v) in enumerate(pairs(n)):
        bit = ((masks >> masks.dtype.type(k)) & masks.dtype.type(1)).astype(np.int8)
        deg[u] += bit
        deg[v] += bit
    return deg


def neighbourhoods(masks: np.ndarray, n: int) -> list[np.ndarray]:
    adj = [np.zeros(len(masks), dtype=np.uint32) for _ in range(n)]
    for k, (u, v) in enumerate(pairs(n)):
        bit = ((masks >> masks.dtype.type(k)) & masks.dtype.type(1)).astype(np.uint32)
        adj[u] |= bit << np.uint32(v)
        adj[v] |= bit << np.uint32(u)
    return adj


def _connected_without(adj: list[np.ndarray], n: int, drop: int | None) -> np.ndarray:
    keep = [v for v in range(n) if v != drop]
    full = np.uint32(sum(1 << v for v in keep))
    reach = np.full(len(adj[0]), np.uint32(1 << keep[0]), dtype=np.uint32)
    for _ in range(len(keep) - 1):
        new = reach.copy()
        for v in keep:
            hit = (reach >> np.uint32(v)) & np.uint32(1)
            new |= adj[v] * hit
        new &= full
        if np.array_equal(new, reach):
            break
        reach = new
    return reach == full


def connected(masks: np.ndarray, n: int) -> np.ndarray:
    if n <= 1:
        return np.ones(len(masks), dtype=bool)
    return _connected_without(neighbourhoods(masks, n), n, None)


def biconnected(masks: np.ndarray, n: int) -> np.ndarray:
    """2-connectivity; the single edge on two vertices counts as 2-connected."""
    if n == 2:
        return masks == 1
    if n < 2:
        return np.zeros(len(masks), dtype=bool)
    adj = neighbourhoods(masks, n)
    ok = _connected_without(adj, n, None)
    for v in range(n):
        if not ok.any():
            break
        ok &= _connected_without(adj, n, v)
    return ok


@lru_cache(maxsize=None)
def subdivision_patterns(n: int, kind: str, max_subdivisions: int | None = None) -> tuple[int, ...]:
    """Masks of every subgraph of K_n that is a subdivision of K5 or K3,3.

    ``max_subdivisions`` caps the number of degree-two vertices.
    """
    idx = pair_index(n)
    if kind == "K5":
        bases = [[(a, b) for a, b in combinations(q, 2)] for q in combinations(range(n), 5)]
        k_branch = 5
    elif kind == "K33":
        bases = []
        for six in combinations(range(n), 6):
            for left in combinations(six, 3):
                if six[0] not in left:
                    continue
                right = [x for x in six if x not in left]
                bases.append([(a, b) for a in left for b in right])
        k_branch = 6
    else:
        raise ValueError(kind)
    cap = n - k_branch if max_subdivisions is None else min(max_subdivisions, n - k_branch)
    seen: set[frozenset] = set()
    level = {frozenset(norm_edge(*e) for e in b) for b in bases}
    seen |= level
    for _ in range(cap):
        nxt = set()
        for es in level:
            used = {x for e in es for x in e}
            for w in range(n):
                if w in used:
                    continue
                for (x, y) in es:
                    new = (es - {(x, y)}) | {norm_edge(x, w), norm_edge(w, y)}
                    if new not in seen:
                        nxt.add(new)
        seen |= nxt
        level = nxt
    out = []
    for es in seen:
        msk = 0
        for e in es:
            msk |= 1 << idx[e]
        out.append(msk)
    return tuple(sorted(out))


def contains_any(masks: np.ndarray, patterns, chunk: int = 64) -> np.ndarray:
    """Whether each mask is a superset of at least one pattern."""
    hit = np.zeros(len(masks), dtype=bool)
    dt = masks.dtype.type
    for p in patterns:
        pv = dt(p)
        hit |= (masks & pv) == pv
    return hit


def planar_small(masks: np.ndarray, n: int) -> np.ndarray:
    """Planarity for graphs on at most 7 vertices by Kuratowski pattern containment."""
    if n > 7:
        raise ValueError("pattern planarity is only tabulated up to 7 vertices")
    out = np.ones(len(masks), dtype=bool)
    if n < 5:
        return out
    m = popcount(masks)
    cand = np.nonzero(m >= 9)[0]
    if len(cand) == 0:
        return out
    sub = masks[cand]
    bad = contains_any(sub, subdivision_patterns(n, "K5"))
    if n >= 6:
        rest = np.nonzero(~bad)[0]
        bad[rest] |= contains_any(sub[rest], subdivision_patterns(n, "K33"))
    out[cand] = ~bad
    return out


def all_masks(n: int) -> np.ndarray:
    return np.arange(1 << len(pairs(n)), dtype=_dtype(n))


# ---------------------------------------------------------------------------
# planarity by minors: G is non-planar iff some G - v or some G / e is.
# A Kuratowski subdivision either misses a vertex or spans G; in the latter
# case it is K5 or K3,3 itself (only possible for 5 or 6 vertices) or it
# has a subdivision vertex, and contracting one of its path edges keeps a
# Kuratowski subdivision.

@lru_cache(maxsize=None)
def _deletion_map(n: int, v: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    keep = [x for x in range(n) if x != v]
    new = {x: i for i, x in enumerate(keep)}
    src = pair_index(n)
    dst = pair_index(n - 1)
    out = []
    for (a, b), t in sorted(dst.items(), key=lambda kv: kv[1]):
        out.append((t, (src[(keep[a], keep[b])],)))
    del new
    return tuple(out)


@lru_cache(maxsize=None)
def _contraction_map(n: int, u: int, v: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Bits of G / uv (v merged into u, labels compacted) as ORs of bits of G."""
    keep = [x for x in range(n) if x != v]
    new = {x: i for i, x in enumerate(keep)}
    new[v] = new[u]
    src = pair_index(n)
    groups: dict[int, list[int]] = {}
    dst = pair_index(n - 1)
    for (a, b), k in src.items():
        if {a, b} == {u, v}:
            continue
        a2, b2 = new[a], new[b]
        groups.setdefault(dst[norm_edge(a2, b2)], []).append(k)
    return tuple((t, tuple(ks)) for t, ks in sorted(groups.items()))


def _apply_map(masks: np.ndarray, mapping) -> np.ndarray:
    out = np.zeros(len(masks), dtype=np.uint32)
    one = masks.dtype.type(1)
    for t, ks in mapping:
        bit = np.zeros(len(masks), dtype=masks.dtype)
        for k in ks:
            bit |= (masks >> masks.dtype.type(k)) & one
        out |= bit.astype(np.uint32) << np.uint32(t)
    return out


@lru_cache(maxsize=None)
def planar_table(n: int) -> np.ndarray:
    """Boolean planarity of every mask on ``n <= 7`` vertices, indexed by mask."""
    if n > 7:
        raise ValueError("planarity tables are built up to 7 vertices")
    masks = all_masks(n)
    if n <= 4:
        return np.ones(len(masks), dtype=bool)
    return planar_by_minors(masks, n)


def planar_by_minors(masks: np.ndarray, n: int) -> np.ndarray:
    """Planarity of graphs on ``n`` vertices from the table for ``n - 1``."""
    if n <= 4:
        return np.ones(len(masks), dtype=bool)
    table = planar_table(n - 1)
    m = popcount(masks)
    out = m <= 3 * n - 6
    idx = np.nonzero(out & (m >= 9))[0]
    sub = masks[idx]
    ok = np.ones(len(sub), dtype=bool)
    if n in (5, 6):
        ok &= ~contains_any(sub, subdivision_patterns(n, "K5" if n == 5 else "K33", 0))
    for v in range(n):
        live = np.nonzero(ok)[0]
        if len(live) == 0:
            break
        ok[live] = table[_apply_map(sub[live], _deletion_map(n, v))]
    for k, (u, v) in enumerate(pairs(n)):
        live = np.nonzero(ok & (((sub >> sub.dtype.type(k)) & sub.dtype.type(1)) == 1))[0]
        if len(live) == 0:
            continue
        ok[live] = table[_apply_map(sub[live], _contraction_map(n, u, v))]
    out[idx] = ok
    return out
