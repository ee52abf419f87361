"""Labelled 2-connected planar graphs by exhaustive sweep, and network series.

``p[n][m]`` counts labelled 2-connected planar graphs.  ``q[n][m]`` counts
pairs (G, uv) with uv an edge of such a G and every vertex other than u, v
of degree at least 3 in G; it drives the series of strongly planar networks
without internal vertices of degree 2.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from pathlib import Path

import numpy as np

from . import bitgraphs as bg
from .planarity import Network
from .series import BivariateSeries

N_CAP_DEFAULT = 7
N_CAP_MAX = 8
CHUNK_BITS = 22
DATA_DIR = Path(__file__).parent / "data"
DEFAULT_CACHE = DATA_DIR / "planar_counts.txt"


class NOverCap(ValueError):
    pass


class InsufficientTable(ValueError):
    pass


class TooLarge(ValueError):
    pass


class CacheValidationError(ValueError):
    pass


# ---------------------------------------------------------------------------
# sweep

def _sweep_chunk(n: int, lo: int, hi: int) -> tuple[Counter, Counter]:
    masks = np.arange(lo, hi, dtype=np.uint64 if n > 8 else np.uint32)
    m = bg.popcount(masks)
    keep = (m >= n) & (m <= 3 * n - 6)
    masks, m = masks[keep], m[keep]
    deg = bg.degrees(masks, n)
    keep = deg.min(axis=0) >= 2
    masks, m, deg = masks[keep], m[keep], deg[:, keep]
    keep = bg.biconnected(masks, n)
    masks, m, deg = masks[keep], m[keep], deg[:, keep]
    keep = bg.planar_by_minors(masks, n)
    masks, m, deg = masks[keep], m[keep], deg[:, keep]
    p = Counter({int(k): int(c) for k, c in enumerate(np.bincount(m)) if c})
    low = np.zeros(len(masks), dtype=np.uint32)
    for v in range(n):
        low |= (deg[v] <= 2).astype(np.uint32) << np.uint32(v)
    good = np.zeros(len(masks), dtype=np.int64)
    one = masks.dtype.type(1)
    for k, (u, v) in enumerate(bg.pairs(n)):
        has = ((masks >> masks.dtype.type(k)) & one) == 1
        rest = low & np.uint32(~((1 << u) | (1 << v)) & 0xFFFFFFFF)
        good += (has & (rest == 0)).astype(np.int64)
    q = Counter()
    for mm, g in zip(m.tolist(), good.tolist()):
        if g:
            q[mm] += g
    return p, q


def sweep_planar(n: int, threads: int = 1) -> tuple[dict[int, int], dict[int, int]]:
    """Exact rows ``p[n]`` and ``q[n]`` by sweeping all labelled graphs on n vertices."""
    if n < 2:
        raise ValueError("need at least 2 vertices")
    if n > N_CAP_MAX:
        raise NOverCap(f"the sweep is capped at n = {N_CAP_MAX}")
    if n == 2:
        return {1: 1}, {1: 1}
    total = 1 << len(bg.pairs(n))
    step = min(total, 1 << CHUNK_BITS)
    ranges = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    p, q = Counter(), Counter()
    if threads > 1 and len(ranges) > 1:
        with ProcessPoolExecutor(threads) as ex:
            parts = list(ex.map(_sweep_chunk, [n] * len(ranges), *zip(*ranges)))
    else:
        parts = [_sweep_chunk(n, lo, hi) for lo, hi in ranges]
    for a, b in parts:
        p.update(a)
        q.update(b)
    return dict(sorted(p.items())), dict(sorted(q.items()))


# ---------------------------------------------------------------------------
# table and cache

@dataclass
class PlanarCountTable:
    p: dict[int, dict[int, int]] = field(default_factory=dict)
    q: dict[int, dict[int, int]] = field(default_factory=dict)

    @property
    def n_cap(self) -> int:
        n = 1
        while n + 1 in self.p and n + 1 in self.q:
            n += 1
        return n

    def capped(self, n_cap: int) -> "PlanarCountTable":
        return PlanarCountTable({n: r for n, r in self.p.items() if n <= n_cap},
                                {n: r for n, r in self.q.items() if n <= n_cap})

    def poly(self, n: int) -> dict[int, int]:
        return dict(self.p[n])

    def check_invariants(self) -> None:
        if self.p.get(2) != {1: 1}:
            raise CacheValidationError("p[2] must be y")
        for n, row in self.p.items():
            for m, c in row.items():
                if c <= 0 or (n >= 3 and not n <= m <= 3 * n - 6):
                    raise CacheValidationError(f"p[{n}][{m}] = {c} out of range")

    def save(self, path: Path) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        _write_rows(path, self.p)
        _write_rows(_q_path(path), self.q)

    @classmethod
    def load(cls, path: Path, validate: bool = True) -> "PlanarCountTable":
        path = Path(path)
        try:
            p_rows = _read_rows(path)
            q_rows = _read_rows(_q_path(path))
            # rows without any good edge (n = 3) are not written out
            t = cls(p_rows, {n: q_rows.get(n, {}) for n in p_rows})
        except (OSError, ValueError) as exc:
            raise CacheValidationError(f"unreadable planar cache {path}: {exc}") from exc
        if validate:
            t.check_invariants()
            for n in range(2, 6):
                p, q = sweep_planar(n)
                if t.p.get(n) != p or t.q.get(n) != q:
                    raise CacheValidationError(f"cached row n={n} disagrees with recomputation")
        return t


def _q_path(path: Path) -> Path:
    return path.with_name(path.stem + "_good_edges" + path.suffix)


def _write_rows(path: Path, rows: dict[int, dict[int, int]]) -> None:
    lines = [f"{n} {m} {c}" for n in sorted(rows) for m, c in sorted(rows[n].items())]
    path.write_text("\n".join(lines) + "\n")


def _read_rows(path: Path) -> dict[int, dict[int, int]]:
    rows: dict[int, dict[int, int]] = {}
    for line in path.read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        n, m, c = (int(t) for t in line.split())
        rows.setdefault(n, {})[m] = c
    return rows


def compute_table(n_cap: int = N_CAP_DEFAULT, threads: int = 1, base: PlanarCountTable | None = None) -> PlanarCountTable:
    t = PlanarCountTable(dict(base.p) if base else {}, dict(base.q) if base else {})
    for n in range(2, n_cap + 1):
        if n not in t.p or n not in t.q:
            t.p[n], t.q[n] = sweep_planar(n, threads)
    return t


def load_table(n_cap: int = N_CAP_DEFAULT, cache: Path | None = None, threads: int = 1,
               validate: bool = True) -> PlanarCountTable:
    """Table through ``n_cap``, from the cache when present, sweeping missing rows."""
    if n_cap > N_CAP_MAX:
        raise NOverCap(f"the sweep is capped at n = {N_CAP_MAX}")
    path = Path(cache) if cache is not None else DEFAULT_CACHE
    base = PlanarCountTable.load(path, validate) if path.exists() else None
    if base is not None and base.n_cap >= n_cap:
        return base.capped(n_cap)
    t = compute_table(n_cap, threads, base)
    try:
        t.save(path)
    except OSError:
        pass
    return t.capped(n_cap)


@lru_cache(maxsize=4)
def default_table(n_cap: int = N_CAP_DEFAULT) -> PlanarCountTable:
    return load_table(n_cap)


def count_2connected_planar(n: int, table: PlanarCountTable | None = None) -> dict[int, int]:
    """p_n(y) as ``{m: count}``."""
    if n > N_CAP_MAX:
        raise NOverCap(f"n = {n} exceeds the sweep cap {N_CAP_MAX}")
    if table is not None and n in table.p:
        return dict(table.p[n])
    return sweep_planar(n)[0]


# ---------------------------------------------------------------------------
# network series

def _egf(rows: dict[int, dict[int, int]], order: int) -> BivariateSeries:
    terms = {}
    for n, row in rows.items():
        if n <= order:
            for m, c in row.items():
                terms[(n, m)] = Fraction(c, factorial(n))
    return BivariateSeries.from_terms(terms, order)


def _need(table: PlanarCountTable, order_N: int) -> None:
    if table.n_cap < order_N + 2:
        raise InsufficientTable(
            f"networks with {order_N} internal vertices need planar counts through n = {order_N + 2}, "
            f"table has n_cap = {table.n_cap}")


def planar_network_series(order_N: int, table: PlanarCountTable | None = None) -> BivariateSeries:
    """N_P(x, y) = (1 + y) (2 / x^2) dP/dy - 1, x counting internal vertices."""
    table = table or default_table()
    _need(table, order_N)
    P = _egf(table.p, order_N + 2)
    d = P.diff_y().scale(2).shift_x(-2)
    y1 = BivariateSeries.one(order_N) + BivariateSeries.var(0, order_N)
    return y1 * d - BivariateSeries.one(order_N)


def irreducible_network_series(order_N: int, table: PlanarCountTable | None = None) -> BivariateSeries:
    """Strongly planar networks whose internal vertices all have degree at least 3.

    Closing such a network with the pole edge gives a 2-connected planar G in
    which every vertex off the pole pair has degree >= 3, so the count comes
    from ``q`` just as N_P comes from ``dP/dy``.
    """
    table = table or default_table()
    _need(table, order_N)
    Q = _egf(table.q, order_N + 2)
    d = Q.scale(2).shift_x(-2)
    return d + d.shift_var(0, -1) - BivariateSeries.one(order_N)


# ---------------------------------------------------------------------------
# explicit networks

@lru_cache(maxsize=None)
def enumerate_networks(n_internal: int) -> tuple[Network, ...]:
    """All strongly planar networks on internal vertices ``0..k-1`` with poles ``k, k+1``."""
    k = n_internal
    if k < 0:
        raise ValueError("n_internal must be nonnegative")
    if k > 4:
        raise TooLarge("explicit enumeration is limited to 4 internal vertices")
    n = k + 2
    pole = bg.pair_index(n)[(k, k + 1)]
    masks = bg.all_masks(n)
    masks = masks[((masks >> masks.dtype.type(pole)) & masks.dtype.type(1)) == 1]
    masks = masks[bg.biconnected(masks, n)]
    masks = masks[bg.planar_table(n)[masks]] if n <= 7 else masks
    out = []
    for msk in sorted(int(x) for x in masks):
        g = bg.graph_of(n, msk)
        out.append(Network(g.edges, k, k + 1))
        if k > 0:
            out.append(Network(g.edges - {(k, k + 1)}, k, k + 1))
    return tuple(out)


def network_counts(n_internal: int) -> dict[int, int]:
    return dict(sorted(Counter(net.m for net in enumerate_networks(n_internal)).items()))


def default_threads() -> int:
    return max(1, len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else 1)
