"""Counting series of the class: core series, substitution of networks, tables.

Every member is a core (K5, M, M*, or a circular crown) whose edges are
replaced by strongly planar networks, so its series is the core series
with y replaced by the network series.  Dropping the K5 core leaves the
non-projective-planar members.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .crowns import cc_series
from .planar_networks import (PlanarCountTable, default_table, irreducible_network_series,
                              planar_network_series)
from .series import BivariateSeries

DEFAULT_ORDER = 13

# lowest vertex count of a core of each kind; a member on n vertices uses
# networks with at most n - (this) internal vertices, i.e. planar counts
# through n - (this) + 2 vertices
K5_MIN = 5
NON_K5_MIN = 8


class InsufficientPlanarTable(ValueError):
    pass


class BoundViolation(AssertionError):
    pass


@dataclass(frozen=True)
class CoreSeriesBundle:
    k5: BivariateSeries
    m: BivariateSeries
    m_star: BivariateSeries
    cc: BivariateSeries

    @property
    def total(self) -> BivariateSeries:
        return self.k5 + self.m + self.m_star + self.cc

    @property
    def non_k5(self) -> BivariateSeries:
        return self.m + self.m_star + self.cc


def core_series(order_N: int = DEFAULT_ORDER) -> CoreSeriesBundle:
    return CoreSeriesBundle(
        k5=BivariateSeries.monomial(5, 10, Fraction(1, factorial(5)), order_N),
        m=BivariateSeries.monomial(8, 19, Fraction(280, factorial(8)), order_N),
        m_star=BivariateSeries.monomial(8, 18, Fraction(280, factorial(8)), order_N),
        cc=cc_series(order_N),
    )


def max_order(n_cap: int, include_k5: bool) -> int:
    """Largest vertex count whose coefficients are exact with planar counts through ``n_cap``."""
    return n_cap - 2 + (K5_MIN if include_k5 else NON_K5_MIN)


def _table(order_N: int, include_k5: bool, table: PlanarCountTable | None) -> PlanarCountTable:
    table = table or default_table()
    if order_N > max_order(table.n_cap, include_k5):
        raise InsufficientPlanarTable(
            f"order {order_N} needs planar counts through n = {order_N - (K5_MIN if include_k5 else NON_K5_MIN) + 2}; "
            f"the table stops at n_cap = {table.n_cap}, which supports order "
            f"{max_order(table.n_cap, include_k5)} (enable the 8-vertex sweep for one more row)")
    return table


def _substituted(outer: BivariateSeries, inner: BivariateSeries) -> BivariateSeries:
    s = outer.substitute_y(inner)
    s.assert_integral()
    return s


def toroidal_series(order_N: int = DEFAULT_ORDER, table: PlanarCountTable | None = None) -> BivariateSeries:
    """T(x, y) = T_C(x, N_P(x, y)), all members including the K5 core."""
    table = _table(order_N, True, table)
    np_ = planar_network_series(order_N - K5_MIN, table)
    return _substituted(core_series(order_N).total, np_)


def non_projective_series(order_N: int = DEFAULT_ORDER, table: PlanarCountTable | None = None) -> BivariateSeries:
    """T(x, y) minus the K5-core part."""
    table = _table(order_N, False, table)
    np_ = planar_network_series(order_N - NON_K5_MIN, table)
    return _substituted(core_series(order_N).non_k5, np_)


def irreducible_series(order_N: int = DEFAULT_ORDER, table: PlanarCountTable | None = None) -> BivariateSeries:
    """Non-projective members without vertices of degree 2.

    A member has no vertex of degree 2 exactly when every substituted network
    has none among its internal vertices (core vertices have degree >= 3), so
    the non-K5 core series is composed with the degree-2-free network series.
    """
    table = _table(order_N, False, table)
    ni = irreducible_network_series(order_N - NON_K5_MIN, table)
    return _substituted(core_series(order_N).non_k5, ni)


def path_inversion_series(order_N: int = DEFAULT_ORDER, table: PlanarCountTable | None = None) -> BivariateSeries:
    """T(x, y / (1 + x y)) restricted to non-K5 cores.

    This would be the degree-2-free series if every member arose from a
    unique degree-2-free member by subdividing edges.  It does not: a member
    can have several edges between the same pair after suppressing degree-2
    vertices, so this series disagrees with the true counts (first at
    9 vertices, 20 edges) and is kept only to document that.
    """
    s = non_projective_series(order_N, table)
    terms = {(k, k + 1): (-1) ** k for k in range(order_N + 1)}
    inner = BivariateSeries.from_terms(terms, order_N)
    return s.substitute_y(inner)


# ---------------------------------------------------------------------------
# bounds and tables

@dataclass(frozen=True)
class EdgeBoundReport:
    max_edges: dict[int, int]

    def bound(self, n: int) -> int:
        return edge_bound(n)


def edge_bound(n: int) -> int:
    """Largest edge count of a member on n vertices."""
    return 3 * n - 5 if n in (5, 8) else 3 * n - 6


def verify_edge_bounds(series: BivariateSeries | dict) -> EdgeBoundReport:
    counts = series.counts() if isinstance(series, BivariateSeries) else series
    top: dict[int, int] = {}
    for (n, m), c in counts.items():
        if c == 0:
            continue
        if m > edge_bound(n):
            raise BoundViolation(f"{c} graphs with n={n}, m={m} exceed the bound {edge_bound(n)}")
        top[n] = max(top.get(n, 0), m)
    return EdgeBoundReport(dict(sorted(top.items())))


def totals(counts: dict[tuple[int, int], int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for (n, _), c in counts.items():
        out[n] = out.get(n, 0) + c
    return dict(sorted(out.items()))


def rows(series: BivariateSeries | dict, min_n: int = 0) -> dict[tuple[int, int], int]:
    counts = series.counts() if isinstance(series, BivariateSeries) else series
    return {k: v for k, v in sorted(counts.items()) if v and k[0] >= min_n}


def render_tables(series: BivariateSeries | dict, fmt: str = "tsv", by_vertices: bool = False,
                  min_n: int = 0) -> str:
    """Rows ``n m count`` (or ``n count`` with ``by_vertices``) sorted by n then m."""
    data = rows(series, min_n)
    if by_vertices:
        header = ("n", "count")
        body = [(str(n), str(c)) for n, c in totals(data).items()]
    else:
        header = ("n", "m", "count")
        body = [(str(n), str(m), str(c)) for (n, m), c in data.items()]
    if fmt == "tsv":
        return "\n".join("\t".join(r) for r in [header, *body]) + "\n"
    if fmt == "text":
        widths = [max(len(r[i]) for r in [header, *body]) for i in range(len(header))]
        return "\n".join(" ".join(c.rjust(w) for c, w in zip(r, widths)) for r in [header, *body]) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
