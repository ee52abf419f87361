"""Labelled simple graphs and the elementary operations shared by the package.

Vertices are the integers ``0..n-1``; an edge is stored as a sorted pair.
Most algorithms elsewhere work on edge sets over arbitrary integer labels
(side components, networks), so the helpers here accept plain edge
iterables as well as :class:`LabelledGraph` objects.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import networkx as nx

Edge = tuple[int, int]


class GraphError(ValueError):
    """Base class for malformed graph input."""


class DisconnectedInput(GraphError):
    pass


class EdgeAbsent(GraphError):
    pass


class ParseError(GraphError):
    pass


def norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise GraphError(f"self-loop at {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class LabelledGraph:
    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphError(f"bad edge {(u, v)} for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "LabelledGraph":
        es = set()
        for u, v in edges:
            e = norm_edge(int(u), int(v))
            if e in es:
                raise GraphError(f"duplicate edge {e}")
            es.add(e)
        return cls(n, frozenset(es))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def relabel(self, perm: Sequence[int]) -> "LabelledGraph":
        """Apply the vertex bijection ``v -> perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabelling must be a permutation of 0..n-1")
        return LabelledGraph(self.n, frozenset(norm_edge(perm[u], perm[v]) for u, v in self.edges))

    def with_edge(self, u: int, v: int) -> "LabelledGraph":
        return LabelledGraph(self.n, self.edges | {norm_edge(u, v)})

    def to_edge_list(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines += [f"{u} {v}" for u, v in self.sorted_edges()]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Block:
    vertices: frozenset[int]
    edges: frozenset[Edge]


@dataclass(frozen=True)
class BlockTree:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]
    # cut vertex -> indices of the blocks containing it
    incidence: dict[int, tuple[int, ...]] = field(hash=False, compare=False)


def parse_edge_list(text: str) -> LabelledGraph:
    """Parse the ``n m`` / ``u v`` edge-list format."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise ParseError("empty input")
    try:
        n, m = (int(t) for t in rows[0])
    except ValueError as exc:
        raise ParseError(f"bad header line: {' '.join(rows[0])!r}") from exc
    if len(rows) - 1 != m:
        raise ParseError(f"header announces {m} edges, found {len(rows) - 1}")
    edges = []
    for r in rows[1:]:
        if len(r) != 2:
            raise ParseError(f"bad edge line: {' '.join(r)!r}")
        try:
            u, v = int(r[0]), int(r[1])
        except ValueError as exc:
            raise ParseError(f"bad edge line: {' '.join(r)!r}") from exc
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(f"edge {u} {v} out of range for n={n}")
        edges.append((u, v))
    try:
        return LabelledGraph.from_edges(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def nx_from_edges(edges: Iterable[Edge], vertices: Iterable[int] = ()) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(vertices)
    g.add_edges_from(edges)
    return g


def _as_nx(g) -> nx.Graph:
    if isinstance(g, LabelledGraph):
        return g.to_networkx()
    if isinstance(g, nx.Graph):
        return g
    return nx_from_edges(g)


def is_2connected(g) -> bool:
    """2-connectivity, with the single edge on two vertices counted as 2-connected."""
    h = _as_nx(g)
    k = h.number_of_nodes()
    if k < 2:
        return False
    if k == 2:
        return h.number_of_edges() == 1
    return nx.is_biconnected(h)


def block_decomposition(g) -> BlockTree:
    h = _as_nx(g)
    if h.number_of_nodes() == 0 or not nx.is_connected(h):
        raise DisconnectedInput("block decomposition needs a connected graph")
    blocks = []
    for comp in nx.biconnected_component_edges(h):
        es = frozenset(norm_edge(u, v) for u, v in comp)
        vs = frozenset(x for e in es for x in e)
        blocks.append(Block(vs, es))
    blocks.sort(key=lambda b: (min(b.vertices), sorted(b.edges)))
    inc: dict[int, list[int]] = {}
    for i, b in enumerate(blocks):
        for v in b.vertices:
            inc.setdefault(v, []).append(i)
    cuts = {v: tuple(ix) for v, ix in inc.items() if len(ix) > 1}
    return BlockTree(tuple(blocks), frozenset(cuts), cuts)


def subdivide_edge(g: LabelledGraph, e: Sequence[int], k: int) -> LabelledGraph:
    """Replace edge ``e`` by a path through ``k`` fresh vertices ``n..n+k-1``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    u, v = norm_edge(*e)
    if (u, v) not in g.edges:
        raise EdgeAbsent(f"edge {(u, v)} not in graph")
    if k == 0:
        return g
    path = [u, *range(g.n, g.n + k), v]
    new = set(g.edges)
    new.discard((u, v))
    new.update(norm_edge(a, b) for a, b in zip(path, path[1:]))
    return LabelledGraph(g.n + k, frozenset(new))


def connected_components(vertices: Iterable[int], adj: dict[int, set[int]]) -> Iterator[set[int]]:
    """Components of the subgraph induced on ``vertices`` (adjacency may reach outside)."""
    todo = set(vertices)
    while todo:
        s = todo.pop()
        comp = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in todo:
                    todo.discard(y)
                    comp.add(y)
                    stack.append(y)
        yield comp


def adjacency_of(edges: Iterable[Edge]) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    return adj


# small named graphs used across tests, the CLI and the generator

def complete_graph(k: int) -> LabelledGraph:
    return LabelledGraph(k, frozenset((i, j) for i in range(k) for j in range(i + 1, k)))


def cycle_graph(k: int) -> LabelledGraph:
    return LabelledGraph(k, frozenset(norm_edge(i, (i + 1) % k) for i in range(k)))


def path_graph(k: int) -> LabelledGraph:
    return LabelledGraph(k, frozenset((i, i + 1) for i in range(k - 1)))


def complete_bipartite(p: int, q: int) -> LabelledGraph:
    return LabelledGraph(p + q, frozenset((i, p + j) for i in range(p) for j in range(q)))


def grid_graph(r: int, c: int) -> LabelledGraph:
    es = []
    for i in range(r):
        for j in range(c):
            v = i * c + j
            if j + 1 < c:
                es.append((v, v + 1))
            if i + 1 < r:
                es.append((v, v + c))
    return LabelledGraph.from_edges(r * c, es)
