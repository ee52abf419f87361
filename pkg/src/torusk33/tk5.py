"""Structure of a graph around a fixed K5-subdivision.

Short cuts and 3-corner vertices certify a K3,3-subdivision.  Without them,
every component of ``G - corners`` hangs on exactly two corners and the graph
splits into ten side components, one per corner pair.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graph import Edge, LabelledGraph, adjacency_of, connected_components, norm_edge
from .planarity import KuratowskiWitness, Network, NetworkClass, classify_network, edges_between


class InvalidSubdivision(ValueError):
    pass


class ShortCutPresent(ValueError):
    def __init__(self, path):
        super().__init__(f"short cut {path}")
        self.path = path


class ThreeCornerVertexPresent(ValueError):
    def __init__(self, vertex, paths):
        super().__init__(f"3-corner vertex {vertex}")
        self.vertex = vertex
        self.paths = paths


@dataclass(frozen=True)
class K5Subdivision:
    corners: tuple[int, ...]
    # side paths keyed by sorted corner pair, listed from the smaller corner
    sides: dict[tuple[int, int], tuple[int, ...]]

    @classmethod
    def from_witness(cls, w: KuratowskiWitness) -> "K5Subdivision":
        if w.kind != "K5":
            raise InvalidSubdivision("witness is not a K5-subdivision")
        sides = {}
        for p in w.paths:
            if p[0] > p[-1]:
                p = tuple(reversed(p))
            sides[(p[0], p[-1])] = tuple(p)
        return cls(tuple(sorted(w.branch_vertices)), sides)

    def inner_vertices(self) -> dict[tuple[int, int], tuple[int, ...]]:
        return {k: p[1:-1] for k, p in self.sides.items()}

    def vertices(self) -> set[int]:
        return {v for p in self.sides.values() for v in p}

    def edges(self) -> set[Edge]:
        return {norm_edge(p[i], p[i + 1]) for p in self.sides.values() for i in range(len(p) - 1)}

    def side_of(self) -> dict[int, tuple[int, int]]:
        return {v: k for k, p in self.sides.items() for v in p[1:-1]}

    def check(self, adj: dict[int, set[int]]) -> None:
        if len(set(self.corners)) != 5 or len(self.sides) != 10:
            raise InvalidSubdivision("need 5 corners and 10 sides")
        if set(self.sides) != {tuple(sorted(c)) for c in combinations(self.corners, 2)}:
            raise InvalidSubdivision("sides do not match corner pairs")
        seen: set[int] = set()
        for (a, b), p in self.sides.items():
            if p[0] != a or p[-1] != b:
                raise InvalidSubdivision(f"side {(a, b)} has wrong ends")
            inner = set(p[1:-1])
            if len(inner) != len(p) - 2 or inner & seen or inner & set(self.corners):
                raise InvalidSubdivision("sides are not internally disjoint")
            seen |= inner
            for x, y in zip(p, p[1:]):
                if y not in adj.get(x, ()):
                    raise InvalidSubdivision(f"edge {(x, y)} of side {(a, b)} not in host")


@dataclass(frozen=True)
class SideComponent:
    corner_pair: tuple[int, int]
    edges: frozenset[Edge]
    augmented: bool  # host edge between the two corners is present

    @property
    def network(self) -> Network:
        a, b = self.corner_pair
        return Network(self.edges, a, b)

    def vertices(self) -> frozenset[int]:
        return frozenset(x for e in self.edges for x in e) | set(self.corner_pair)


def _adj(g) -> dict[int, set[int]]:
    if isinstance(g, LabelledGraph):
        adj = {v: set() for v in range(g.n)}
        for u, v in g.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj
    if isinstance(g, dict):
        return g
    return adjacency_of(g)


def _bfs_path(adj, starts: set[int], targets: set[int], allowed: set[int]) -> list[int]:
    """Shortest path inside ``allowed`` from a start vertex to a target vertex."""
    prev = {s: None for s in starts}
    q = deque(sorted(starts))
    while q:
        x = q.popleft()
        if x in targets:
            path = [x]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])
            return path[::-1]
        for y in sorted(adj[x]):
            if y in allowed and y not in prev:
                prev[y] = x
                q.append(y)
    raise AssertionError("no path inside a connected component")


def _outside_components(adj, tk5: K5Subdivision):
    tv = tk5.vertices()
    rest = [v for v in adj if v not in tv]
    for comp in sorted(connected_components(rest, adj), key=min):
        attach = {t for x in comp for t in adj[x] if t in tv}
        yield comp, attach


def find_short_cut(g, tk5: K5Subdivision) -> tuple[int, ...] | None:
    adj = _adj(g)
    tk5.check(adj)
    side_of = tk5.side_of()
    on_side = {k: set(p) for k, p in tk5.sides.items()}
    tedges = tk5.edges()
    tv = tk5.vertices()
    for x in sorted(side_of):
        s = side_of[x]
        for y in sorted(adj[x]):
            if y in tv and norm_edge(x, y) not in tedges and y not in on_side[s]:
                return (x, y)
    for comp, attach in _outside_components(adj, tk5):
        for x in sorted(attach & side_of.keys()):
            s = side_of[x]
            others = sorted(attach - on_side[s])
            if not others:
                continue
            y = others[0]
            inner = _bfs_path(adj, {c for c in adj[x] if c in comp}, {c for c in adj[y] if c in comp}, comp)
            return (x, *inner, y)
    return None


def _three_corner(adj, tk5: K5Subdivision):
    corners = set(tk5.corners)
    for comp, attach in _outside_components(adj, tk5):
        hit = sorted(attach & corners)
        if len(hit) < 3:
            continue
        ends = [min(v for v in comp if c in adj[v]) for c in hit[:3]]
        # BFS tree of the component; the median of the three ends has disjoint tree paths to them
        root = ends[0]
        parent = {root: None}
        q = deque([root])
        while q:
            x = q.popleft()
            for y in sorted(adj[x]):
                if y in comp and y not in parent:
                    parent[y] = x
                    q.append(y)

        def up(v):
            out = [v]
            while parent[out[-1]] is not None:
                out.append(parent[out[-1]])
            return out

        # rooted at ends[0], the median of the three ends is lca(ends[1], ends[2])
        anc2 = set(up(ends[2]))
        median = next(v for v in up(ends[1]) if v in anc2)
        paths = []
        for c, e in zip(hit[:3], ends):
            route = _tree_path(parent, median, e)
            paths.append(tuple(route) + (c,))
        return median, paths
    return None


def _tree_path(parent, u, v) -> list[int]:
    pu = [u]
    while parent[pu[-1]] is not None:
        pu.append(parent[pu[-1]])
    pv = [v]
    while parent[pv[-1]] is not None:
        pv.append(parent[pv[-1]])
    su = set(pu)
    lca = next(x for x in pv if x in su)
    return pu[:pu.index(lca) + 1] + pv[:pv.index(lca)][::-1]


def find_3corner_vertex(g, tk5: K5Subdivision) -> int | None:
    adj = _adj(g)
    tk5.check(adj)
    hit = _three_corner(adj, tk5)
    return None if hit is None else hit[0]


def three_corner_paths(g, tk5: K5Subdivision):
    adj = _adj(g)
    tk5.check(adj)
    return _three_corner(adj, tk5)


def side_components(g, tk5: K5Subdivision) -> list[SideComponent]:
    adj = _adj(g)
    path = find_short_cut(adj, tk5)
    if path is not None:
        raise ShortCutPresent(path)
    hit = _three_corner(adj, tk5)
    if hit is not None:
        raise ThreeCornerVertexPresent(*hit)
    corners = set(tk5.corners)
    side_of = tk5.side_of()
    groups: dict[tuple[int, int], set[int]] = {tuple(sorted(p)): set() for p in combinations(tk5.corners, 2)}
    rest = [v for v in adj if v not in corners]
    for comp in connected_components(rest, adj):
        att = sorted({t for x in comp for t in adj[x] if t in corners})
        sides = {side_of[x] for x in comp if x in side_of}
        if len(att) != 2 or len(sides) > 1 or (sides and sides != {tuple(att)}):
            raise InvalidSubdivision(f"component attached to corners {att}")
        groups[tuple(att)] |= comp
    out = []
    for pair in sorted(groups):
        a, b = pair
        es = edges_between(adj, groups[pair] | {a, b})
        out.append(SideComponent(pair, es, b in adj[a]))
    return out


@dataclass(frozen=True)
class ToroidalityCase:
    kind: str  # CaseI | CaseII | NeedsM | NotToroidalHere
    index: int | None = None


def classify_toroidality(g, comps: list[SideComponent]) -> ToroidalityCase:
    classes = [classify_network(c.network) for c in comps]
    bad = [i for i, c in enumerate(classes) if c is not NetworkClass.STRONGLY_PLANAR]
    if not bad:
        return ToroidalityCase("CaseI")
    if len(bad) == 1:
        i = bad[0]
        if classes[i] is NetworkClass.CYLINDRICAL:
            return ToroidalityCase("CaseII", i)
        return ToroidalityCase("NeedsM", i)
    return ToroidalityCase("NotToroidalHere")
