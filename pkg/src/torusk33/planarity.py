"""Planarity, Kuratowski witnesses, exact K3,3-subdivision detection, networks.

The boolean planarity test is networkx's left-right implementation.  Witness
extraction shrinks a non-planar graph to an edge-minimal non-planar subgraph
(which is always a subdivision of K5 or K3,3) by chunked deletion, which is
much cheaper than deleting one edge at a time on graphs of a few hundred
edges.

``contains_k33_subdivision`` does not look at witnesses at all: it splits the
graph along blocks and separation pairs and applies the fact that a
3-connected graph has no K3,3 minor iff it is planar or K5.  Since K3,3 is
cubic, a K3,3 minor and a K3,3 subdivision are the same thing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

import networkx as nx

from .graph import Edge, LabelledGraph, adjacency_of, is_2connected, norm_edge, nx_from_edges


def _to_nx(g) -> nx.Graph:
    if isinstance(g, nx.Graph):
        return g
    if isinstance(g, LabelledGraph):
        return g.to_networkx()
    if isinstance(g, Network):
        return nx_from_edges(g.edges, (g.a, g.b))
    return nx_from_edges(g)


def _planar_nx(h: nx.Graph) -> bool:
    m = h.number_of_edges()
    if m <= 8:
        return True
    n = sum(1 for v in h if h.degree(v) > 0)
    if n >= 3 and m > 3 * n - 6:
        return False
    return nx.check_planarity(h)[0]


def is_planar(g) -> bool:
    return _planar_nx(_to_nx(g))


# ---------------------------------------------------------------------------
# Kuratowski witnesses

@dataclass(frozen=True)
class KuratowskiWitness:
    kind: str  # "K5" or "K33"
    branch_vertices: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]

    def edges(self) -> frozenset[Edge]:
        return frozenset(norm_edge(p[i], p[i + 1]) for p in self.paths for i in range(len(p) - 1))

    def parts(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Bipartition of the branch vertices of a K3,3 witness."""
        if self.kind != "K33":
            raise ValueError("only K3,3 witnesses have parts")
        first = self.branch_vertices[0]
        side_b = {p[-1] if p[0] == first else p[0] for p in self.paths if first in (p[0], p[-1])}
        side_a = set(self.branch_vertices) - side_b
        return tuple(sorted(side_a)), tuple(sorted(side_b))

    def is_valid_in(self, g) -> bool:
        host = {norm_edge(u, v) for u, v in _to_nx(g).edges()}
        return self.edges() <= host and self.is_valid()

    def is_valid(self) -> bool:
        """Structural check: the paths realise a subdivision of K5 or K3,3."""
        bv = set(self.branch_vertices)
        if self.kind == "K5":
            if len(bv) != 5 or len(self.paths) != 10:
                return False
            want = {frozenset((u, v)) for u in bv for v in bv if u != v}
        elif self.kind == "K33":
            if len(bv) != 6 or len(self.paths) != 9:
                return False
            try:
                a, b = self.parts()
            except ValueError:
                return False
            if len(a) != 3 or len(b) != 3:
                return False
            want = {frozenset((u, v)) for u in a for v in b}
        else:
            return False
        ends = [frozenset((p[0], p[-1])) for p in self.paths]
        if set(ends) != want or len(ends) != len(want):
            return False
        seen: set[int] = set()
        for p in self.paths:
            if len(p) < 2 or len(set(p)) != len(p):
                return False
            inner = set(p[1:-1])
            if inner & bv or inner & seen:
                return False
            seen |= inner
        return True


def _ddmin_delete(items: list, keep_nonplanar) -> list:
    """Drop as many ``items`` as possible while ``keep_nonplanar(removed)`` holds."""
    items = list(items)
    chunk = max(1, len(items) // 2)
    while True:
        i = 0
        while i < len(items):
            part = items[i:i + chunk]
            if keep_nonplanar(part):
                del items[i:i + chunk]
            else:
                i += chunk
        if chunk == 1:
            return items
        chunk = max(1, chunk // 2)


def _minimal_nonplanar_subgraph(h: nx.Graph) -> nx.Graph:
    h = h.copy()
    # non-planarity survives in some block
    for comp in nx.biconnected_components(h):
        if len(comp) >= 5 and not _planar_nx(h.subgraph(comp)):
            h = nx.Graph(h.subgraph(comp))
            break

    def drop_vertices(part):
        trial = h.copy()
        trial.remove_nodes_from(part)
        if _planar_nx(trial):
            return False
        h.remove_nodes_from(part)
        return True

    _ddmin_delete(sorted(h.nodes, key=lambda v: (h.degree(v), v)), drop_vertices)

    def drop_edges(part):
        h.remove_edges_from(part)
        if _planar_nx(h):
            h.add_edges_from(part)
            return False
        return True

    _ddmin_delete(sorted(norm_edge(u, v) for u, v in h.edges), drop_edges)
    h.remove_nodes_from([v for v in list(h) if h.degree(v) == 0])
    return h


def witness_from_subdivision(h: nx.Graph) -> KuratowskiWitness:
    """Read branch vertices and paths off a graph that is a TK5 or TK3,3."""
    branch = sorted(v for v in h if h.degree(v) > 2)
    if len(branch) == 5 and all(h.degree(v) == 4 for v in branch):
        kind = "K5"
    elif len(branch) == 6 and all(h.degree(v) == 3 for v in branch):
        kind = "K33"
    else:
        raise ValueError("graph is not a Kuratowski subdivision")
    bset = set(branch)
    paths = []
    seen = set()
    for s in branch:
        for nb in sorted(h[s]):
            path = [s, nb]
            while path[-1] not in bset:
                nxt = [w for w in h[path[-1]] if w != path[-2]]
                path.append(nxt[0])
            key = frozenset(((path[0], path[1]), (path[-1], path[-2])))
            if key in seen:
                continue
            seen.add(key)
            if path[0] > path[-1]:
                path.reverse()
            paths.append(tuple(path))
    paths.sort()
    return KuratowskiWitness(kind, tuple(branch), tuple(paths))


def kuratowski_witness(g) -> KuratowskiWitness | None:
    h = _to_nx(g)
    if _planar_nx(h):
        return None
    return witness_from_subdivision(_minimal_nonplanar_subgraph(h))


# ---------------------------------------------------------------------------
# exact K3,3 test

def _suppress_degree_two(h: nx.Graph) -> None:
    stack = [v for v in h if h.degree(v) <= 2]
    while stack:
        v = stack.pop()
        if v not in h:
            continue
        d = h.degree(v)
        if d <= 1:
            nbrs = list(h[v])
            h.remove_node(v)
            stack.extend(nbrs)
        elif d == 2:
            u, w = h[v]
            h.remove_node(v)
            # a parallel u-w route cannot be used twice by a K3,3 subdivision
            h.add_edge(u, w)
            stack.extend((u, w))


def _separation_pair(h: nx.Graph) -> tuple[int, int] | None:
    for u in sorted(h):
        rest = h.subgraph(x for x in h if x != u)
        for v in nx.articulation_points(rest):
            return u, v
    return None


def _contains_k33(h: nx.Graph) -> bool:
    work = [h]
    while work:
        piece = nx.Graph(work.pop())
        _suppress_degree_two(piece)
        if piece.number_of_nodes() < 6:
            continue
        if not nx.is_connected(piece):
            work.extend(piece.subgraph(c) for c in nx.connected_components(piece))
            continue
        if not nx.is_biconnected(piece):
            work.extend(piece.edge_subgraph(c) for c in nx.biconnected_component_edges(piece))
            continue
        if _planar_nx(piece):
            continue
        sep = _separation_pair(piece)
        if sep is None:
            # 3-connected and non-planar: K3,3 unless the piece is K5 itself
            if piece.number_of_nodes() == 5:
                continue
            return True
        u, v = sep
        rest = piece.subgraph(x for x in piece if x not in sep)
        for comp in nx.connected_components(rest):
            part = nx.Graph(piece.subgraph(set(comp) | {u, v}))
            part.add_edge(u, v)
            work.append(part)
    return False


def contains_k33_subdivision(g) -> bool:
    return _contains_k33(_to_nx(g))


def k33_witness(g) -> KuratowskiWitness | None:
    """A K3,3 subdivision in ``g``, or None if there is none."""
    h = nx.Graph(_to_nx(g))
    if not _contains_k33(h):
        return None
    w = kuratowski_witness(h)
    if w is not None and w.kind == "K33":
        return w

    def drop(part):
        h.remove_edges_from(part)
        if _contains_k33(h):
            return True
        h.add_edges_from(part)
        return False

    _ddmin_delete(sorted(norm_edge(u, v) for u, v in h.edges), drop)
    h.remove_nodes_from([v for v in list(h) if h.degree(v) == 0])
    return witness_from_subdivision(h)


# ---------------------------------------------------------------------------
# networks

class NetworkClass(enum.Enum):
    STRONGLY_PLANAR = "StronglyPlanar"
    CYLINDRICAL = "Cylindrical"
    NON_PLANAR = "NonPlanarNetwork"


@dataclass(frozen=True)
class Network:
    """A graph with two poles; labels are those of whatever host it lives in."""

    edges: frozenset[Edge]
    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError("poles must differ")

    @classmethod
    def from_graph(cls, g: LabelledGraph, a: int, b: int) -> "Network":
        return cls(g.edges, a, b)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def pole_edge(self) -> Edge:
        return norm_edge(self.a, self.b)

    def vertices(self) -> frozenset[int]:
        return frozenset(x for e in self.edges for x in e) | {self.a, self.b}

    def internal(self) -> frozenset[int]:
        return self.vertices() - {self.a, self.b}

    @property
    def n_internal(self) -> int:
        return len(self.internal())

    def is_single_edge(self) -> bool:
        return self.edges == frozenset({self.pole_edge})

    def closed(self) -> frozenset[Edge]:
        """Edge set of N with the pole edge added."""
        return self.edges | {self.pole_edge}

    def swapped(self) -> "Network":
        return Network(self.edges, self.b, self.a)

    def canonical(self) -> "Network":
        return self if self.a < self.b else self.swapped()

    def relabel(self, f) -> "Network":
        return Network(frozenset(norm_edge(f[u], f[v]) for u, v in self.edges), f[self.a], f[self.b])

    def is_valid(self) -> bool:
        if not self.edges:
            return False
        h = nx_from_edges(self.edges, (self.a, self.b))
        return nx.is_connected(h) and is_2connected(self.closed())


def classify_network(net: Network) -> NetworkClass:
    if is_planar(net.closed()):
        return NetworkClass.STRONGLY_PLANAR
    if net.pole_edge not in net.edges and is_planar(net.edges):
        return NetworkClass.CYLINDRICAL
    return NetworkClass.NON_PLANAR


def is_strongly_planar(net: Network) -> bool:
    return is_planar(net.closed())


def edges_between(adj: dict[int, set[int]], vs: Iterable[int]) -> frozenset[Edge]:
    vs = set(vs)
    return frozenset(norm_edge(u, v) for u in vs for v in adj.get(u, ()) if v in vs)


__all__ = [
    "KuratowskiWitness", "Network", "NetworkClass", "classify_network", "contains_k33_subdivision",
    "edges_between", "is_planar", "is_strongly_planar", "k33_witness", "kuratowski_witness",
    "witness_from_subdivision", "adjacency_of",
]
