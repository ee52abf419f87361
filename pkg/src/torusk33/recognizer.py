"""Recognition and canonical decomposition of toroidal K3,3-subdivision-free graphs.

A member is a toroidal core (K5, the M-graph, the M*-graph or a circular
crown) with a strongly planar network substituted for every core edge.
:func:`recognize` finds a K5-subdivision, splits the graph into its ten side
components and reads the core off the (at most one) side component that is
not strongly planar.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence


from .graph import (Edge, LabelledGraph, adjacency_of, block_decomposition, connected_components,
                    is_2connected, norm_edge)
from .planarity import (KuratowskiWitness, Network, NetworkClass, classify_network, contains_k33_subdivision,
                        edges_between, is_planar, k33_witness, kuratowski_witness)
from .tk5 import K5Subdivision, SideComponent, classify_toroidality, find_short_cut, side_components, three_corner_paths

K5_EDGES = tuple(combinations(range(5), 2))


# ---------------------------------------------------------------------------
# cores

@dataclass(frozen=True)
class CoreKind:
    kind: str  # "K5" | "MGraph" | "MStarGraph" | "CircularCrown"
    cycle_length: int | None = None
    substituted: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind == "CircularCrown":
            i = self.cycle_length
            if i is None or i < 3:
                raise ValueError("a circular crown needs a cycle of length >= 3")
            subs = set(self.substituted)
            if not subs or not subs <= set(range(i)) or len(subs) != len(self.substituted):
                raise ValueError("bad substituted positions")
            for k in range(i):
                if k not in subs and (k + 1) % i not in subs:
                    raise ValueError("unsubstituted cycle edges must form a matching")
        elif self.kind not in ("K5", "MGraph", "MStarGraph"):
            raise ValueError(f"unknown core kind {self.kind}")

    def __str__(self):
        if self.kind == "CircularCrown":
            return f"CircularCrown(i={self.cycle_length}, substituted={list(self.substituted)})"
        return self.kind


def core_graph(core: CoreKind) -> tuple[int, list[Edge]]:
    """Vertex count and ordered edge list of the core graph."""
    if core.kind == "K5":
        return 5, list(K5_EDGES)
    if core.kind in ("MGraph", "MStarGraph"):
        es = set(K5_EDGES) | {norm_edge(u, v) for u, v in combinations((0, 1, 5, 6, 7), 2)}
        if core.kind == "MStarGraph":
            es.discard((0, 1))
        return 8, sorted(es)
    i = core.cycle_length
    edges: list[Edge] = []
    nxt = i
    for k in range(i):
        u, v = k, (k + 1) % i
        if k in core.substituted:
            quint = (u, v, nxt, nxt + 1, nxt + 2)
            nxt += 3
            edges += sorted(norm_edge(x, y) for x, y in combinations(quint, 2) if {x, y} != {u, v})
        else:
            edges.append(norm_edge(u, v))
    return nxt, edges


def core_as_graph(core: CoreKind) -> LabelledGraph:
    n, es = core_graph(core)
    return LabelledGraph(n, frozenset(es))


# ---------------------------------------------------------------------------
# decompositions

class LabelCollision(ValueError):
    pass


class ComponentNotStronglyPlanar(ValueError):
    pass


@dataclass(frozen=True)
class Decomposition:
    core: CoreKind
    vertex_map: tuple[int, ...]  # core vertex -> host label
    components: tuple[Network, ...]  # aligned with core_graph(core) edges

    def core_edges(self) -> list[Edge]:
        return core_graph(self.core)[1]

    def component_map(self) -> dict[frozenset, Network]:
        return {frozenset(n.pole_edge): n for n in self.components}

    def host_edges(self) -> frozenset[Edge]:
        return frozenset(e for n in self.components for e in n.edges)

    def relabel(self, perm: Sequence[int]) -> "Decomposition":
        return canonicalize(Decomposition(self.core, tuple(perm[v] for v in self.vertex_map),
                                          tuple(n.relabel(perm).canonical() for n in self.components)))

    def serialize(self) -> str:
        lines = [f"core: {self.core.kind}"]
        if self.core.kind == "CircularCrown":
            lines.append(f"cycle_length: {self.core.cycle_length}")
            lines.append("substituted: " + " ".join(map(str, self.core.substituted)))
        lines.append("vertex_map: " + " ".join(f"{i}->{h}" for i, h in enumerate(self.vertex_map)))
        lines.append(f"components: {len(self.components)}")
        for (u, v), net in zip(self.core_edges(), self.components):
            es = " ".join(f"{x}-{y}" for x, y in sorted(net.edges))
            lines.append(f"  edge {u} {v}: poles {net.a} {net.b}; internal {net.n_internal}; edges {es}")
        return "\n".join(lines) + "\n"


def compose(core: CoreKind, components: Sequence[Network], host_labels: Sequence[int]) -> LabelledGraph:
    """Substitute ``components[j]`` for the j-th core edge.

    The pole ``a`` of a component goes to the first endpoint of its core edge
    and ``b`` to the second; internal labels are kept and must be disjoint.
    """
    n_core, edges = core_graph(core)
    if len(components) != len(edges):
        raise ValueError(f"core has {len(edges)} edges, got {len(components)} components")
    if len(host_labels) != n_core or len(set(host_labels)) != n_core:
        raise LabelCollision("host labels of the core must be distinct")
    used = set(host_labels)
    out: set[Edge] = set()
    for (u, v), net in zip(edges, components):
        if classify_network(net) is not NetworkClass.STRONGLY_PLANAR:
            raise ComponentNotStronglyPlanar(f"component on core edge {(u, v)}")
        inner = net.internal()
        if inner & used:
            raise LabelCollision(f"labels {sorted(inner & used)} reused")
        used |= inner
        f = {net.a: host_labels[u], net.b: host_labels[v]}
        out |= {norm_edge(f.get(x, x), f.get(y, y)) for x, y in net.edges}
    n = len(used)
    if used != set(range(n)):
        raise LabelCollision("labels must be exactly 0..n-1")
    return LabelledGraph(n, frozenset(out))


def _rebuild(core: CoreKind, vmap: Sequence[int], by_pair: dict[frozenset, Network]) -> Decomposition:
    comps = []
    for u, v in core_graph(core)[1]:
        comps.append(by_pair[frozenset((vmap[u], vmap[v]))].canonical())
    return Decomposition(core, tuple(vmap), tuple(comps))


def _element_size(by_pair, hosts: Sequence[int], pairs) -> int:
    vs = set(hosts)
    for p in pairs:
        vs |= by_pair[frozenset(p)].vertices()
    return len(vs)


def canonicalize(d: Decomposition) -> Decomposition:
    """Put a decomposition in its deterministic normal form.

    K5: corners sorted.  M/M*: shared pair first, then the two other triples,
    each sorted, triple with the smaller minimum first.  Crowns: the dihedral
    image of the cycle minimising the (type, size) element sequence, ties
    broken by host labels of the cycle vertices.
    """
    by_pair = d.component_map()
    vm = d.vertex_map
    kind = d.core.kind
    if kind == "K5":
        return _rebuild(d.core, sorted(vm), by_pair)
    if kind in ("MGraph", "MStarGraph"):
        x, y = sorted(vm[2:5]), sorted(vm[5:8])
        if y < x:
            x, y = y, x
        return _rebuild(d.core, [*sorted(vm[:2]), *x, *y], by_pair)
    i = d.core.cycle_length
    cyc = list(vm[:i])
    inner: dict[int, list[int]] = {}
    nxt = i
    for k in range(i):
        if k in d.core.substituted:
            inner[k] = sorted(vm[nxt:nxt + 3])
            nxt += 3
    elems = []
    for k in range(i):
        u, v = cyc[k], cyc[(k + 1) % i]
        if k in inner:
            quint = [u, v, *inner[k]]
            pairs = [p for p in combinations(quint, 2) if set(p) != {u, v}]
            elems.append((0, _element_size(by_pair, quint, pairs), inner[k]))
        else:
            elems.append((1, _element_size(by_pair, (u, v), [(u, v)]), None))
    best = None
    for refl in (False, True):
        for r in range(i):
            if refl:
                cv = [cyc[(-k - r) % i] for k in range(i)]
                el = [elems[(-k - r - 1) % i] for k in range(i)]
            else:
                cv = [cyc[(k + r) % i] for k in range(i)]
                el = [elems[(k + r) % i] for k in range(i)]
            key = (tuple(e[:2] for e in el), tuple(cv))
            if best is None or key < best[0]:
                best = (key, cv, el)
    _, cv, el = best
    subs = tuple(k for k, e in enumerate(el) if e[0] == 0)
    vmap = list(cv)
    for k in subs:
        vmap += el[k][2]
    return _rebuild(CoreKind("CircularCrown", i, subs), vmap, by_pair)


# ---------------------------------------------------------------------------
# errors

class RecognitionError(Exception):
    category = "RecognitionError"


class NotTwoConnected(RecognitionError):
    category = "NotTwoConnected"


class PlanarInput(RecognitionError):
    category = "PlanarInput"


class ContainsK33(RecognitionError):
    category = "ContainsK33"

    def __init__(self, witness: KuratowskiWitness | None, detail: str = ""):
        super().__init__(detail or "graph contains a K3,3-subdivision")
        self.witness = witness


class NotToroidal(RecognitionError):
    category = "NotToroidal"

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class _Reject(Exception):
    """A certificate subgraph known to contain a K3,3-subdivision."""

    def __init__(self, edges: frozenset[Edge] | None, witness: KuratowskiWitness | None, detail: str):
        super().__init__(detail)
        self.edges = edges
        self.witness = witness
        self.detail = detail


class _Structural(Exception):
    """The structure theorem's shape is violated; the cause is decided later."""


# ---------------------------------------------------------------------------
# recognition

def _k5_structure(edges: frozenset[Edge]) -> tuple[K5Subdivision, list[SideComponent]]:
    w = kuratowski_witness(edges)
    if w.kind == "K33":
        raise _Reject(None, w, "Kuratowski witness is a K3,3-subdivision")
    tk5 = K5Subdivision.from_witness(w)
    adj = adjacency_of(edges)
    cut = find_short_cut(adj, tk5)
    if cut is not None:
        cert = frozenset(tk5.edges()) | {norm_edge(x, y) for x, y in zip(cut, cut[1:])}
        raise _Reject(cert, None, f"short cut {list(cut)}")
    hit = three_corner_paths(adj, tk5)
    if hit is not None:
        u, paths = hit
        cert = frozenset(tk5.edges()) | {norm_edge(x, y) for p in paths for x, y in zip(p, p[1:])}
        raise _Reject(cert, None, f"3-corner vertex {u}")
    return tk5, side_components(adj, tk5)


def _brick(edges: frozenset[Edge], p: int, q: int):
    """Corners and the nine networks of a K5\\e-brick with poles p, q, or None."""
    closed = edges | {norm_edge(p, q)}
    if norm_edge(p, q) in edges or is_planar(closed):
        return None
    try:
        tk5, comps = _k5_structure(closed)
    except (_Reject, ValueError):
        return None
    if classify_toroidality(None, comps).kind != "CaseI" or not {p, q} <= set(tk5.corners):
        return None
    nets = {}
    for c in comps:
        if set(c.corner_pair) == {p, q}:
            if c.edges != {norm_edge(p, q)}:
                return None
        else:
            nets[frozenset(c.corner_pair)] = c.network
    others = [c for c in tk5.corners if c not in (p, q)]
    return others, nets


def _block_chain(edges: frozenset[Edge], a: int, b: int) -> list[tuple[frozenset[Edge], int, int]]:
    """Blocks of a network listed from pole a to pole b, each with its entry/exit vertex."""
    bt = block_decomposition(edges)
    if a in bt.cut_vertices or b in bt.cut_vertices:
        raise _Structural("a pole is a cut vertex of the side component")
    chain = []
    used: set[int] = set()
    cur = a
    while True:
        cand = [i for i, blk in enumerate(bt.blocks) if cur in blk.vertices and i not in used]
        if len(cand) != 1:
            raise _Structural("blocks of the side component do not form a path")
        i = cand[0]
        used.add(i)
        blk = bt.blocks[i]
        if b in blk.vertices:
            exits = [b]
            if any(c != cur for c in blk.vertices & bt.cut_vertices):
                raise _Structural("blocks of the side component do not form a path")
        else:
            exits = [c for c in blk.vertices & bt.cut_vertices if c != cur]
        if len(exits) != 1:
            raise _Structural("blocks of the side component do not form a path")
        chain.append((blk.edges, cur, exits[0]))
        cur = exits[0]
        if cur == b:
            break
    if len(used) != len(bt.blocks):
        raise _Structural("blocks of the side component do not form a path")
    return chain


def _pieces(s: SideComponent) -> list[frozenset[Edge]]:
    a, b = s.corner_pair
    adj = adjacency_of(s.edges)
    inner = [v for v in adj if v not in (a, b)]
    return [edges_between(adj, comp | {a, b}) - {norm_edge(a, b)}
            for comp in sorted(connected_components(inner, adj), key=min)]


def _decompose(edges: frozenset[Edge]) -> Decomposition:
    tk5, comps = _k5_structure(edges)
    case = classify_toroidality(None, comps)
    if case.kind == "CaseI":
        vm = list(tk5.corners)
        return canonicalize(_rebuild(CoreKind("K5"), vm, {frozenset(c.corner_pair): c.network for c in comps}))
    if case.kind == "NotToroidalHere":
        raise _Structural("more than one side component is not strongly planar")

    s = comps[case.index]
    a, b = s.corner_pair
    outer = [c for c in comps if c is not s]
    by_pair = {frozenset(c.corner_pair): c.network for c in outer}
    x = [c for c in tk5.corners if c not in (a, b)]
    pieces = _pieces(s)

    if case.kind == "NeedsM":
        bricks, rest = [], set()
        for pc in pieces:
            if classify_network(Network(pc, a, b)) is NetworkClass.STRONGLY_PLANAR:
                rest |= pc
            else:
                bricks.append(pc)
        if len(bricks) != 1:
            raise _Structural(f"{len(bricks)} non-planar pieces between the poles {a}, {b}")
        found = _brick(bricks[0], a, b)
        if found is None:
            raise _Structural("piece between the poles is not a K5\\e-brick")
        y, nets = found
        if s.augmented:
            rest.add(norm_edge(a, b))
        n_ab = Network(frozenset(rest), a, b)
        if not rest or classify_network(n_ab) is not NetworkClass.STRONGLY_PLANAR:
            raise _Structural("network on the shared pair is not strongly planar")
        by_pair.update(nets)
        by_pair[frozenset((a, b))] = n_ab
        return canonicalize(_rebuild(CoreKind("MGraph"), [a, b, *x, *y], by_pair))

    # CaseII: a cylindrical side component; its blocks form a path from a to b
    if len(pieces) != 1:
        raise _Structural("cylindrical side component is not a chain of blocks")
    elements = []  # (is_brick, p, q, edges, inner corners, nets)
    for blk, p, q in _block_chain(s.edges, a, b):
        if classify_network(Network(blk, p, q)) is NetworkClass.STRONGLY_PLANAR:
            if elements and not elements[-1][0]:
                _, p0, _, es, _, _ = elements.pop()
                elements.append((False, p0, q, es | blk, None, None))
            else:
                elements.append((False, p, q, blk, None, None))
            continue
        found = _brick(blk, p, q)
        if found is None:
            raise _Structural(f"block with poles {p}, {q} is neither strongly planar nor a K5\\e-brick")
        elements.append((True, p, q, blk, *found))
    n_bricks = sum(e[0] for e in elements)
    assert n_bricks > 0, "cylindrical side component without a cylindrical block"
    if len(elements) == 1:
        _, _, _, _, y, nets = elements[0]
        by_pair.update(nets)
        return canonicalize(_rebuild(CoreKind("MStarGraph"), [a, b, *x, *y], by_pair))
    cyc = [a] + [e[2] for e in elements]  # ends at b
    i = len(cyc)
    subs = []
    inner: list[int] = []
    for k, (is_brick, p, q, es, y, nets) in enumerate(elements):
        if is_brick:
            subs.append(k)
            inner += y
            by_pair.update(nets)
        else:
            by_pair[frozenset((p, q))] = Network(es, p, q)
    subs.append(i - 1)  # the outer brick closes the cycle from b back to a
    inner += x
    core = CoreKind("CircularCrown", i, tuple(subs))
    return canonicalize(_rebuild(core, cyc + inner, by_pair))


def _edges_of(g) -> frozenset[Edge]:
    if isinstance(g, LabelledGraph):
        return g.edges
    return frozenset(norm_edge(u, v) for u, v in g)


def recognize(g: LabelledGraph, *, witness: bool = True) -> Decomposition:
    """Canonical decomposition of ``g`` or a :class:`RecognitionError`.

    ``witness=False`` skips building K3,3 witnesses on rejection (the
    accept/reject decision is unchanged); exhaustive sweeps use it.
    """
    if not is_2connected(g):
        raise NotTwoConnected("graph is not 2-connected")
    if is_planar(g):
        raise PlanarInput("graph is planar")
    edges = _edges_of(g)
    try:
        return _decompose(edges)
    except _Reject as rej:
        w = rej.witness
        if w is None and witness:
            w = k33_witness(rej.edges)
        raise ContainsK33(w, rej.detail) from None
    except _Structural as exc:
        if contains_k33_subdivision(edges):
            raise ContainsK33(k33_witness(edges) if witness else None, str(exc)) from None
        raise NotToroidal(str(exc)) from None


def is_member(g: LabelledGraph) -> bool:
    try:
        recognize(g, witness=False)
    except RecognitionError:
        return False
    return True


def format_error(err: RecognitionError) -> str:
    lines = [err.category, f"reason: {err}"]
    if isinstance(err, ContainsK33) and err.witness is not None:
        w = err.witness
        lines.append(f"kind: {w.kind}")
        lines.append("branch_vertices: " + " ".join(map(str, w.branch_vertices)))
        if w.kind == "K33":
            pa, pb = w.parts()
            lines.append("parts: " + " ".join(map(str, pa)) + " | " + " ".join(map(str, pb)))
        for p in w.paths:
            lines.append("path: " + " ".join(map(str, p)))
    return "\n".join(lines) + "\n"
