"""Matching polynomials of paths and cycles, the pair series BC and the crown series CC.

A circular crown is a cycle C_i (i >= 3) on core vertices in which a set
of cycle edges is replaced by K5\\e bricks; the edges left alone must form a
matching.  Marking kept edges by y and replaced edges by z, the labelled
cycles weighted by their matchings are BC(x, y, z); substituting the brick
series for z gives CC(x, y).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial

from .series import BivariateSeries


class CycleTooShort(ValueError):
    pass


@lru_cache(maxsize=None)
def path_matching_poly(n: int) -> tuple[int, ...]:
    """U_n: matching polynomial of the path on n vertices, as coefficients of y^k."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n <= 1:
        return (1,)
    a, b = path_matching_poly(n - 2), path_matching_poly(n - 1)
    out = [0] * max(len(a) + 1, len(b))
    for k, c in enumerate(b):
        out[k] += c
    for k, c in enumerate(a):
        out[k + 1] += c
    return tuple(out)


def cycle_matching_poly(n: int) -> tuple[int, ...]:
    """T_n = y U_{n-2} + U_n."""
    if n < 3:
        raise CycleTooShort(f"cycles need at least 3 vertices, got {n}")
    a, b = path_matching_poly(n - 2), path_matching_poly(n)
    out = [0] * max(len(a) + 1, len(b))
    for k, c in enumerate(b):
        out[k] += c
    for k, c in enumerate(a):
        out[k + 1] += c
    return tuple(out)


def homogeneous_cycle_poly(n: int) -> dict[tuple[int, int], int]:
    """T_n(y, z) = z^n T_n(y/z) as ``{(deg_y, deg_z): coefficient}``."""
    return {(k, n - k): c for k, c in enumerate(cycle_matching_poly(n)) if c}


def brute_matching_poly(n_vertices: int, edges) -> tuple[int, ...]:
    """Matching polynomial of an arbitrary small graph by listing edge subsets."""
    edges = list(edges)
    counts = [0] * (n_vertices // 2 + 1)
    for k in range(len(counts)):
        for sub in combinations(edges, k):
            ends = [x for e in sub for x in e]
            if len(set(ends)) == len(ends):
                counts[k] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def bc_series_sum(order_N: int) -> BivariateSeries:
    """BC(x, y, z) from its defining sum over cycle lengths."""
    terms = {}
    for n in range(3, order_N + 1):
        w = Fraction(factorial(n - 1), 2 * factorial(n))
        for e, c in homogeneous_cycle_poly(n).items():
            terms[(n, e)] = c * w
    return BivariateSeries.from_terms(terms, order_N, nvars=2)


def bc_series(order_N: int) -> BivariateSeries:
    """BC(x, y, z) = -(2xz + 2x^2 zy + x^2 z^2 + 2 ln(1 - xz - x^2 yz)) / 4."""
    N = order_N
    x = BivariateSeries.x(N, 2)
    y = BivariateSeries.var(0, N, 2)
    z = BivariateSeries.var(1, N, 2)
    xz = x * z
    poly = xz.scale(2) + (x * x * z * y).scale(2) + (xz * xz)
    u = xz + x * x * y * z
    # ln(1 - u) = -log1m(u)
    return (poly - u.log1m().scale(2)).scale(Fraction(-1, 4))


def brick_series(order_N: int, nvars: int = 1) -> BivariateSeries:
    """K5\\e as a network: 3 internal vertices, 9 edges."""
    return BivariateSeries.monomial(3, (9,) + (0,) * (nvars - 1), Fraction(1, 6), order_N, nvars)


def cc_series(order_N: int) -> BivariateSeries:
    """CC(x, y) = BC(x, y, K5\\e(x, y)) by substituting z in the coefficient ring."""
    bc = bc_series(order_N)
    return bc.substitute_var(1, brick_series(order_N, 2)).drop_var(1)


def cc_closed_form(order_N: int) -> BivariateSeries:
    """-(12 x^4 y^9 + 12 x^5 y^10 + x^8 y^18 + 72 ln(1 - u)) / 144, u = (x^4 y^9 + x^5 y^10)/6."""
    N = order_N
    a = BivariateSeries.monomial(4, 9, 1, N)
    b = BivariateSeries.monomial(5, 10, 1, N)
    c = BivariateSeries.monomial(8, 18, 1, N)
    u = (a + b).scale(Fraction(1, 6))
    return ((a + b).scale(12) + c - u.log1m().scale(72)).scale(Fraction(-1, 144))


# ---------------------------------------------------------------------------
# direct counting oracle

def crown_brick_patterns(i: int) -> list[tuple[int, ...]]:
    """Substitution patterns (0/1 per cycle edge) whose unsubstituted edges form a matching."""
    out = []
    for bits in range(1 << i):
        pat = tuple(bits >> k & 1 for k in range(i))
        if all(pat[k] or pat[(k + 1) % i] for k in range(i)):
            out.append(pat)
    return out


def crown_counts_by_automorphisms(max_n: int) -> dict[tuple[int, int], int]:
    """Labelled crown counts from one representative per dihedral class and n!/|Aut|."""
    import networkx as nx
    from networkx.algorithms.isomorphism import GraphMatcher

    from .recognizer import CoreKind, core_as_graph

    out: dict[tuple[int, int], int] = {}
    for i in range(3, max_n + 1):
        seen = set()
        for pat in crown_brick_patterns(i):
            key = min(min(pat[k:] + pat[:k], (pat[::-1])[k:] + (pat[::-1])[:k]) for k in range(i))
            if key in seen:
                continue
            seen.add(key)
            subs = tuple(k for k in range(i) if pat[k])
            n = i + 3 * len(subs)
            if n > max_n:
                continue
            g = core_as_graph(CoreKind("CircularCrown", i, subs))
            h = nx.Graph(list(g.edges))
            aut = sum(1 for _ in GraphMatcher(h, h).isomorphisms_iter())
            m = g.m
            out[(n, m)] = out.get((n, m), 0) + factorial(n) // aut
    return out
